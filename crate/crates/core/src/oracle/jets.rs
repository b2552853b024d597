use std::collections::BTreeMap;

use crate::comb::binom;
use crate::{Error, Result};

use super::field::{Arith, Field, FieldElem, ModP, Rat};
use super::param::{Caps, Parametrization};

/// Evaluated partial derivatives of a parametrization at a point.
///
/// Only multi-indices that some monomial actually reaches are stored; every other row
/// of the full jet matrix is identically zero. `nominal_rows` is the full count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetMatrix {
    pub field: Field,
    pub order: usize,
    pub vars: Vec<usize>,
    pub nominal_rows: u128,
    pub keys: Vec<Vec<u32>>,
    pub rows: Vec<Vec<FieldElem>>,
    pub cols: usize,
}

impl JetMatrix {
    pub fn rank(&self) -> Result<usize> {
        super::field::rank(&self.rows)
    }
}

/// Jets of order `<= s` in every domain variable.
pub fn jet_matrix(p: &Parametrization, point: &[FieldElem], s: usize, caps: &Caps) -> Result<JetMatrix> {
    let vars: Vec<usize> = (0..p.domain_dim).collect();
    jet_matrix_in(p, point, s, &vars, caps)
}

/// Jets of order `<= s` in the listed variables, the others held at their point values.
pub fn jet_matrix_in(
    p: &Parametrization,
    point: &[FieldElem],
    s: usize,
    vars: &[usize],
    caps: &Caps,
) -> Result<JetMatrix> {
    if point.len() != p.domain_dim {
        return Err(Error::ContextMismatch(format!(
            "point has {} entries, domain has {}",
            point.len(),
            p.domain_dim
        )));
    }
    let Some(first) = point.first() else {
        return Err(Error::ContextMismatch("empty point".into()));
    };
    let field = first.field();
    if point.iter().any(|e| e.field() != field) {
        return Err(Error::ContextMismatch("point mixes fields".into()));
    }
    let nominal_rows = binom((vars.len() + s) as u64, s as u64).unwrap_or(u128::MAX);
    let (keys, rows) = match field {
        Field::Prime(q) => {
            let a = ModP(q);
            let pt: Vec<u64> = point
                .iter()
                .map(|e| match e {
                    FieldElem::Mod { residue, .. } => *residue,
                    FieldElem::Rational(_) => unreachable!(),
                })
                .collect();
            let out = jet_rows(&a, p, &pt, s, vars, caps)?;
            let keys = out.iter().map(|(k, _)| k.clone()).collect();
            let rows = out
                .iter()
                .map(|(_, r)| r.iter().map(|x| a.to_elem(x)).collect())
                .collect();
            (keys, rows)
        }
        Field::Rational => {
            let a = Rat;
            let pt: Vec<_> = point
                .iter()
                .map(|e| match e {
                    FieldElem::Rational(q) => q.clone(),
                    FieldElem::Mod { .. } => unreachable!(),
                })
                .collect();
            let out = jet_rows(&a, p, &pt, s, vars, caps)?;
            let keys = out.iter().map(|(k, _)| k.clone()).collect();
            let rows = out
                .iter()
                .map(|(_, r)| r.iter().map(|x| a.to_elem(x)).collect())
                .collect();
            (keys, rows)
        }
    };
    Ok(JetMatrix {
        field,
        order: s,
        vars: vars.to_vec(),
        nominal_rows,
        keys,
        rows,
        cols: p.codomain_dim,
    })
}

/// Stored jet rows ordered by total order, then multi-index.
pub(crate) fn jet_rows<A: Arith>(
    a: &A,
    p: &Parametrization,
    point: &[A::E],
    s: usize,
    vars: &[usize],
    caps: &Caps,
) -> Result<Vec<(Vec<u32>, Vec<A::E>)>> {
    let mut slot = vec![usize::MAX; p.domain_dim];
    for (i, &v) in vars.iter().enumerate() {
        slot[v] = i;
    }
    let max_exp = p
        .coords
        .iter()
        .flatten()
        .flat_map(|m| m.exps.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let powers: Vec<Vec<A::E>> = point
        .iter()
        .map(|x| {
            let mut row = vec![a.from_i64(1)];
            for k in 1..=max_exp {
                let next = a.mul(&row[k - 1], x);
                row.push(next);
            }
            row
        })
        .collect();
    let cols = p.codomain_dim;
    let mut rows: BTreeMap<(u32, Vec<u32>), Vec<A::E>> = BTreeMap::new();
    for (c, poly) in p.coords.iter().enumerate() {
        for m in poly {
            let sparse: Vec<(usize, u32)> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| (v, e))
                .collect();
            let chart: Vec<(usize, u32)> = sparse.iter().copied().filter(|(v, _)| slot[*v] != usize::MAX).collect();
            let fixed = sparse
                .iter()
                .filter(|(v, _)| slot[*v] == usize::MAX)
                .fold(a.from_i64(m.coeff), |acc, &(v, e)| a.mul(&acc, &powers[v][e as usize]));
            if a.is_zero(&fixed) {
                continue;
            }
            let mut alpha = vec![0u32; chart.len()];
            let mut visit = |alpha: &[u32]| {
                let mut val = fixed.clone();
                let mut key = vec![0u32; vars.len()];
                let mut total = 0;
                for (&(v, e), &k) in chart.iter().zip(alpha) {
                    for t in 0..k {
                        val = a.mul(&val, &a.from_i64((e - t) as i64));
                    }
                    val = a.mul(&val, &powers[v][(e - k) as usize]);
                    key[slot[v]] = k;
                    total += k;
                }
                if a.is_zero(&val) {
                    return;
                }
                let row = rows
                    .entry((total, key))
                    .or_insert_with(|| vec![a.zero(); cols]);
                row[c] = a.add(&row[c], &val);
            };
            enumerate_alphas(&chart, 0, s as u32, &mut alpha, &mut visit);
            if rows.len() as u128 > caps.max_jet_rows {
                return Err(Error::CapExceeded {
                    name: "max_jet_rows",
                    value: rows.len() as u128,
                    limit: caps.max_jet_rows,
                });
            }
        }
    }
    // the order-0 row is always present, even if the image point is zero
    rows.entry((0, vec![0; vars.len()]))
        .or_insert_with(|| vec![a.zero(); cols]);
    Ok(rows.into_iter().map(|((_, k), r)| (k, r)).collect())
}

fn enumerate_alphas(
    chart: &[(usize, u32)],
    pos: usize,
    budget: u32,
    alpha: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if pos == chart.len() {
        visit(alpha);
        return;
    }
    for k in 0..=chart[pos].1.min(budget) {
        alpha[pos] = k;
        enumerate_alphas(chart, pos + 1, budget - k, alpha, visit);
    }
    alpha[pos] = 0;
}
