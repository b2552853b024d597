use num_bigint::BigInt;

/// Binomial coefficient, `None` on overflow.
pub fn binom(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Binomial coefficient with an arbitrary integer top and `binom(a, b) = 0` for `b < 0`.
pub fn binom_big(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..b {
        acc *= BigInt::from(a - i);
    }
    for i in 1..=b {
        acc /= BigInt::from(i);
    }
    acc
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All weakly increasing tuples of length `k` with entries in `0..=top`, lexicographic.
pub fn multisets(top: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == top {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let v = cur[i - 1] + 1;
        for c in cur.iter_mut().skip(i - 1) {
            *c = v;
        }
    }
}
