//! Shared combinatorial codings: binomial/factorial tables, colexicographic
//! ranking of subsets (as bitmasks) and Lehmer ranking of permutations.
//! Everything is sized for ground sets of at most [`MAX_N`] points.

/// Hard upper bound on the ground-set size for enumeration-backed machinery.
pub const MAX_N: usize = 12;

const T: usize = MAX_N + 1;

const fn build_binom() -> [[u64; T]; T] {
    let mut c = [[0u64; T]; T];
    let mut n = 0;
    while n < T {
        c[n][0] = 1;
        let mut k = 1;
        while k <= n {
            c[n][k] = c[n - 1][k - 1] + if k <= n - 1 { c[n - 1][k] } else { 0 };
            k += 1;
        }
        n += 1;
    }
    c
}

const fn build_fact() -> [u64; T] {
    let mut f = [1u64; T];
    let mut i = 1;
    while i < T {
        f[i] = f[i - 1] * i as u64;
        i += 1;
    }
    f
}

static BINOM: [[u64; T]; T] = build_binom();
static FACT: [u64; T] = build_fact();

/// C(n, k); zero outside the triangle.
#[inline]
pub fn binomial(n: usize, k: usize) -> u64 {
    if n > MAX_N || k > n {
        return 0;
    }
    BINOM[n][k]
}

/// n! for n <= MAX_N.
#[inline]
pub fn factorial(n: usize) -> u64 {
    FACT[n]
}

/// Colexicographic rank of a k-subset of {0..n-1} given as a bitmask.
///
/// With elements b_1 < b_2 < ... < b_k, the rank is sum C(b_i, i).
pub fn colex_rank(mask: u16) -> usize {
    let mut rank = 0u64;
    let mut i = 1usize;
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        rank += binomial(b, i);
        i += 1;
        m &= m - 1;
    }
    rank as usize
}

/// Inverse of [`colex_rank`]: the k-subset of {0..n-1} with the given rank.
pub fn colex_unrank(n: usize, k: usize, rank: usize) -> u16 {
    debug_assert!(k <= n && n <= MAX_N);
    let mut r = rank as u64;
    let mut mask = 0u16;
    for i in (1..=k).rev() {
        // largest b with C(b, i) <= r
        let mut b = i - 1;
        while b + 1 < n && binomial(b + 1, i) <= r {
            b += 1;
        }
        mask |= 1 << b;
        r -= binomial(b, i);
    }
    debug_assert_eq!(r, 0);
    mask
}

/// Lehmer (factorial-base) rank of a permutation in one-line notation,
/// 0-based values. Rank 0 is the identity; ranks enumerate permutations in
/// lexicographic order of the one-line form.
pub fn lehmer_rank(perm: &[u8]) -> usize {
    let k = perm.len();
    let mut rank = 0u64;
    for i in 0..k {
        let mut smaller = 0u64;
        for j in i + 1..k {
            if perm[j] < perm[i] {
                smaller += 1;
            }
        }
        rank += smaller * factorial(k - 1 - i);
    }
    rank as usize
}

/// Inverse of [`lehmer_rank`].
pub fn lehmer_unrank(k: usize, rank: usize) -> Vec<u8> {
    let mut avail: Vec<u8> = (0..k as u8).collect();
    let mut r = rank as u64;
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let f = factorial(k - 1 - i);
        let d = (r / f) as usize;
        r %= f;
        out.push(avail.remove(d));
    }
    out
}

/// Elements of {0..n-1} NOT in `mask`, ascending.
pub fn complement_list(n: usize, mask: u16) -> Vec<u8> {
    (0..n as u8).filter(|&b| mask & (1 << b) == 0).collect()
}

/// Elements of `mask`, ascending.
pub fn member_list(mask: u16) -> Vec<u8> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as u8);
        m &= m - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(factorial(12), 479001600);
    }

    #[test]
    fn colex_round_trip() {
        for n in 0..=8 {
            for k in 0..=n {
                let count = binomial(n, k) as usize;
                let mut seen = Vec::new();
                for r in 0..count {
                    let mask = colex_unrank(n, k, r);
                    assert_eq!(mask.count_ones() as usize, k);
                    assert_eq!(colex_rank(mask), r);
                    seen.push(mask);
                }
                // colex order: A < B iff max(A xor B) lies in B
                for w in seen.windows(2) {
                    let diff = w[0] ^ w[1];
                    let top = 15 - diff.leading_zeros() as usize;
                    assert!(w[1] & (1 << top) != 0);
                }
            }
        }
    }

    #[test]
    fn colex_first_subset_is_prefix() {
        // {0..k-1} must come first: rank 0
        for k in 0..=6 {
            let mask = ((1u32 << k) - 1) as u16;
            assert_eq!(colex_rank(mask), 0);
        }
    }

    #[test]
    fn lehmer_round_trip() {
        for k in 0..=6 {
            for r in 0..factorial(k) as usize {
                let p = lehmer_unrank(k, r);
                assert_eq!(lehmer_rank(&p), r);
            }
        }
        assert_eq!(lehmer_rank(&[0, 1, 2, 3]), 0);
    }
}
