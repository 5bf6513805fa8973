//! Truncated integer power series in `q` and the Euler product `φ(q)`.

/// `a·b` modulo `q^{n+1}`.
pub fn mul_truncated(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n + 1];
    for (i, &x) in a.iter().enumerate().take(n + 1) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `1/a` modulo `q^{n+1}`; `a` must have constant term 1.
pub fn inverse(a: &[i64], n: usize) -> Vec<i64> {
    assert_eq!(a.first(), Some(&1), "constant term must be 1");
    let mut out = vec![0i64; n + 1];
    out[0] = 1;
    for k in 1..=n {
        let s: i64 = (1..=k.min(a.len() - 1)).map(|i| a[i] * out[k - i]).sum();
        out[k] = -s;
    }
    out
}

/// `a^e` modulo `q^{n+1}`.
pub fn pow_truncated(a: &[i64], e: usize, n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n + 1];
    out[0] = 1;
    for _ in 0..e {
        out = mul_truncated(&out, a, n);
    }
    out
}

/// `φ(q^step) = ∏_{j≥1} (1 - q^{j·step})` modulo `q^{n+1}`.
pub fn euler_phi(step: usize, n: usize) -> Vec<i64> {
    assert!(step >= 1);
    let mut out = vec![0i64; n + 1];
    out[0] = 1;
    let mut j = step;
    while j <= n {
        // multiply by (1 - q^j)
        for k in (j..=n).rev() {
            out[k] -= out[k - j];
        }
        j += step;
    }
    out
}

/// `φ(q^r)/φ(q)`, generating partitions into parts not divisible by `r`.
pub fn restricted_partition_series(r: usize, n: usize) -> Vec<i64> {
    mul_truncated(&euler_phi(r, n), &inverse(&euler_phi(1, n), n), n)
}

/// `1/φ(q)^e`.
pub fn inverse_phi_power(e: usize, n: usize) -> Vec<i64> {
    pow_truncated(&inverse(&euler_phi(1, n), n), e, n)
}
