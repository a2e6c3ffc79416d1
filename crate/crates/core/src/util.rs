/// Binomial coefficient as u128, saturating on overflow.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Visits every k-subset of `0..n` in lexicographic order as a sorted index
/// slice. Stops early if the callback returns false.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All k-subsets of the given sorted pool, in lexicographic order.
pub fn combinations_of(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_combination(pool.len(), k, |c| {
        out.push(c.iter().map(|&i| pool[i]).collect());
        true
    });
    out
}
