use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::arith::divisors;
use crate::bigpoly::IntPoly;

/// Memo table `d ↦ Φ_d(q)`, safe to share between threads.
///
/// `Φ_d` is obtained from `q^d - 1` by exact division by every `Φ_e` with
/// `e | d`, `e < d`. Entries are computed outside the lock, so two threads
/// may race to build the same entry; both produce the identical polynomial.
#[derive(Debug, Default)]
pub struct CycloTable {
    memo: RwLock<HashMap<u64, Arc<IntPoly>>>,
}

impl CycloTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, d: u64) -> Arc<IntPoly> {
        assert!(d >= 1, "cyclotomic index must be positive");
        if let Some(p) = self.memo.read().expect("table lock").get(&d) {
            return Arc::clone(p);
        }
        let mut acc = &IntPoly::q_pow(d as usize) - &IntPoly::one();
        for e in divisors(d) {
            if e == d {
                break;
            }
            acc = acc
                .exact_div(&self.get(e))
                .expect("q^d - 1 is divisible by every Φ_e with e | d");
        }
        let p = Arc::new(acc);
        self.memo
            .write()
            .expect("table lock")
            .entry(d)
            .or_insert(p)
            .clone()
    }

    /// Populates every `Φ_d` with `d <= up_to`.
    pub fn warm(&self, up_to: u64) {
        for d in 1..=up_to {
            self.get(d);
        }
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("table lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
