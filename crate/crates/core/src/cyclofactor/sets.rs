/// Odd `d >= 3` with `⌊(n - (d+1)/2)/d⌋ = ⌊n/d⌋`.
///
/// Such `d` never divide `n` and never exceed `2n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSetS {
    pub n: u64,
    pub members: Vec<u64>,
}

/// `d >= 2` with `⌊k/d⌋ + ⌊(n-k)/d⌋ < ⌊n/d⌋`: exactly the indices of the
/// cyclotomic factors of `[n choose k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSetD {
    pub n: u64,
    pub k: u64,
    pub members: Vec<u64>,
}

impl IndexSetS {
    pub fn contains(&self, d: u64) -> bool {
        self.members.binary_search(&d).is_ok()
    }
}

impl IndexSetD {
    pub fn contains(&self, d: u64) -> bool {
        self.members.binary_search(&d).is_ok()
    }
}

pub fn s_set(n: u64) -> IndexSetS {
    assert!(n >= 1);
    let members = (3..=2 * n - 1)
        .step_by(2)
        .filter(|&d| {
            let half = d.div_ceil(2);
            // (d+1)/2 > n gives a negative numerator whose floor is -1
            half <= n && (n - half) / d == n / d
        })
        .collect();
    IndexSetS { n, members }
}

pub fn d_set(n: u64, k: u64) -> IndexSetD {
    assert!(k <= n, "d_set needs 0 <= k <= n");
    let members = (2..=n)
        .filter(|&d| k / d + (n - k) / d < n / d)
        .collect();
    IndexSetD { n, k, members }
}
