//! Congruences used inside the proofs, checked modulo `Φ_d(q)` or
//! `Φ_d(q²)` for odd `d` through [`CycloModulus`] residues.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::summands::{half_ratio, ratio_alt_sq, ratio_cubic, ratio_even_sq};
use crate::bigpoly::RatFun;
use crate::congruence::CycloModulus;
use crate::cyclofactor::{CycloProduct, CycloTable};
use crate::error::{Error, Result};
use crate::qkit::{central_binomial, QPochSpec};
use crate::report::{CongruenceReport, FamilyParams};

type P = CycloProduct;

fn rational(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn check_odd(d: u64) -> Result<()> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(Error::ParamOutOfRange(format!("d = {d} must be odd and >= 3")));
    }
    Ok(())
}

fn check_t(d: u64, t: u64) -> Result<()> {
    if t >= d {
        return Err(Error::ParamOutOfRange(format!("t = {t} must be below d = {d}")));
    }
    Ok(())
}

fn check_half(d: u64, k: u64) -> Result<()> {
    if k > (d - 1) / 2 {
        return Err(Error::ParamOutOfRange(format!("k = {k} exceeds (d-1)/2 for d = {d}")));
    }
    Ok(())
}

/// Decides `x ≡ y (mod Φ_d(q^base))`.
fn congruent(
    family: &'static str,
    params: FamilyParams,
    d: u64,
    base: u64,
    x: &P,
    y: &P,
    table: &CycloTable,
) -> Result<CongruenceReport> {
    let start = Instant::now();
    let m = CycloModulus::new(d, base, table)?;
    let verdict = m.congruent(&m.residue(x, table)?, &m.residue(y, table)?)?;
    Ok(CongruenceReport::new(family, params, verdict)
        .with_modulus(m.poly())
        .with_elapsed(start.elapsed()))
}

fn c2(s: u64) -> BigRational {
    BigRational::from_integer(central_binomial(s))
}

fn quarter_pow(e: u64) -> BigRational {
    rational(1, BigInt::from(4).pow(e as u32))
}

/// `(q;q²)_{sd+t}/(q²;q²)_{sd+t} ≡ 4^{-s} C(2s,s) (q;q²)_t/(q²;q²)_t` mod `Φ_d(q)`.
pub fn verify_lemma21(d: u64, sidx: u64, t: u64, table: &CycloTable) -> Result<CongruenceReport> {
    check_odd(d)?;
    check_t(d, t)?;
    let x = half_ratio(sidx * d + t, 1);
    let y = half_ratio(t, 1).scale(&(quarter_pow(sidx) * c2(sidx)));
    let params = FamilyParams::default().with_d(d).with_sidx(sidx).with_t(t);
    congruent("lucas", params, d, 1, &x, &y, table)
}

/// `(q;q²)_j/(q²;q²)_j ≡ (-1)^{(d-1)/2} (q;q²)_k/(q²;q²)_k q^{(d-1)²/4+k}`
/// mod `Φ_d(q)` with `j = (d-1)/2 - k`.
pub fn verify_lemma23(d: u64, k: u64, table: &CycloTable) -> Result<CongruenceReport> {
    check_odd(d)?;
    check_half(d, k)?;
    let h = (d - 1) / 2;
    let x = half_ratio(h - k, 1);
    let y = P::sign_power(h) * half_ratio(k, 1) * P::monomial((h * h + k) as i64);
    let params = FamilyParams::default().with_d(d).with_k(k);
    congruent("reflection", params, d, 1, &x, &y, table)
}

/// `(-q;q)_{sd+t} ≡ 2^s (-q;q)_t` mod `Φ_d(q)`.
pub fn verify_lemma31(d: u64, sidx: u64, t: u64, table: &CycloTable) -> Result<CongruenceReport> {
    check_odd(d)?;
    check_t(d, t)?;
    let x = P::pochhammer(QPochSpec::minus(1, 1, sidx * d + t));
    let y = P::pochhammer(QPochSpec::minus(1, 1, t)) * P::integer(BigInt::from(2).pow(sidx as u32));
    let params = FamilyParams::default().with_d(d).with_sidx(sidx).with_t(t);
    congruent("negpoch-shift", params, d, 1, &x, &y, table)
}

/// `(-q;q)_{d-1} ≡ 1` mod `Φ_d(q)`.
pub fn verify_aux_dminus1(d: u64, table: &CycloTable) -> Result<CongruenceReport> {
    check_odd(d)?;
    let x = P::pochhammer(QPochSpec::minus(1, 1, d - 1));
    let params = FamilyParams::default().with_d(d);
    congruent("negpoch-period", params, d, 1, &x, &P::one(), table)
}

/// Which of the inner sums is checked by [`verify_sum_to_0`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfSum {
    /// `Σ_{k ≤ (d-1)/2}` of the alternating base-`q²` summand, mod `Φ_d(q²)`.
    Alternating,
    /// The same with the non-alternating summand.
    Even,
    /// `Σ_{k < d}` of the cubic summand, mod `Φ_d(q)`.
    Cubic,
}

/// The inner sum over one period vanishes modulo `Φ_d(q²)` (or `Φ_d(q)`).
pub fn verify_sum_to_0(
    d: u64,
    r: u64,
    s: u64,
    table: &CycloTable,
) -> Result<CongruenceReport> {
    verify_half_sum(HalfSum::Alternating, d, r, s, table)
}

pub fn verify_half_sum(
    variant: HalfSum,
    d: u64,
    r: u64,
    s: u64,
    table: &CycloTable,
) -> Result<CongruenceReport> {
    check_odd(d)?;
    let start = Instant::now();
    let h = (d - 1) / 2;
    let (terms, base): (Vec<P>, u64) = match variant {
        HalfSum::Alternating => ((0..=h).map(|k| ratio_alt_sq(r, s, k)).collect(), 2),
        HalfSum::Even => ((0..=h).map(|k| ratio_even_sq(r, s, k)).collect(), 2),
        HalfSum::Cubic => ((0..d).map(ratio_cubic).collect(), 1),
    };
    if variant != HalfSum::Cubic && r == 0 {
        return Err(Error::ParamOutOfRange("r must be >= 1".into()));
    }
    let m = CycloModulus::new(d, base, table)?;
    let sum = m.residue_of_sum(&terms, table)?;
    let zero = m.residue(&P::zero(), table)?;
    let verdict = m.congruent(&sum, &zero)?;
    let family = match variant {
        HalfSum::Alternating => "half-sum",
        HalfSum::Even => "half-sum-even",
        HalfSum::Cubic => "half-sum-cubic",
    };
    let mut params = FamilyParams::default().with_d(d);
    if variant != HalfSum::Cubic {
        params = params.with_r(r).with_s(s);
    }
    Ok(CongruenceReport::new(family, params, verdict)
        .with_modulus(m.poly())
        .with_elapsed(start.elapsed()))
}

/// The `((d-1)/2 - k)`-th summand of the alternating inner sum is congruent
/// to minus the `k`-th, modulo `Φ_d(q²)`.
pub fn verify_pair_cancellation(
    d: u64,
    k: u64,
    r: u64,
    s: u64,
    table: &CycloTable,
) -> Result<CongruenceReport> {
    check_odd(d)?;
    check_half(d, k)?;
    if r == 0 {
        return Err(Error::ParamOutOfRange("r must be >= 1".into()));
    }
    let h = (d - 1) / 2;
    let x = ratio_alt_sq(r, s, h - k);
    let y = -&ratio_alt_sq(r, s, k);
    let params = FamilyParams::default().with_d(d).with_k(k).with_r(r).with_s(s);
    congruent("pair-cancel", params, d, 2, &x, &y, table)
}

/// The sequences `ν_k` fed to the period-splitting argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NuRecipe {
    /// Alternating base-`q²` summand without one weight factor.
    Alternating,
    /// Non-alternating base-`q²` summand without one weight factor.
    Even,
    /// Cubic summand without one `(q;q²)_k/(q²;q²)_k` factor.
    Cubic,
}

impl NuRecipe {
    pub const ALL: [NuRecipe; 3] = [NuRecipe::Alternating, NuRecipe::Even, NuRecipe::Cubic];

    pub fn id(self) -> &'static str {
        match self {
            NuRecipe::Alternating => "nu-alt",
            NuRecipe::Even => "nu-even",
            NuRecipe::Cubic => "nu-cubic",
        }
    }

    /// `1` for the `Φ_d(q)` recipe, `2` for the `Φ_d(q²)` ones.
    pub fn base(self) -> u64 {
        match self {
            NuRecipe::Cubic => 1,
            _ => 2,
        }
    }
}

/// `ν_k` for one recipe and fixed `(r, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NuSequence {
    pub recipe: NuRecipe,
    pub r: u64,
    pub s: u64,
}

impl NuSequence {
    pub fn new(recipe: NuRecipe, r: u64, s: u64) -> Result<Self> {
        if recipe != NuRecipe::Cubic && r == 0 {
            return Err(Error::ParamOutOfRange("r must be >= 1".into()));
        }
        Ok(NuSequence { recipe, r, s })
    }

    /// The weight `w_k` with `summand_k = w_k · ν_k`.
    pub fn weight(&self, k: u64) -> P {
        half_ratio(k, self.recipe.base())
    }

    pub fn term(&self, k: u64) -> P {
        let full = match self.recipe {
            NuRecipe::Alternating => ratio_alt_sq(self.r, self.s, k),
            NuRecipe::Even => ratio_even_sq(self.r, self.s, k),
            NuRecipe::Cubic => ratio_cubic(k),
        };
        full.div(&self.weight(k)).expect("weights are nonzero")
    }

    pub fn term_ratfun(&self, k: u64) -> Result<RatFun> {
        self.term(k).to_ratfun()
    }

    /// The explicit multiplier `μ_s` with `ν_{sd+t} ≡ μ_s ν_t`.
    pub fn mu(&self, sidx: u64) -> BigRational {
        let c = central_binomial(sidx);
        match self.recipe {
            NuRecipe::Alternating => {
                let e = 2 * self.r - 2;
                let sign = if sidx.is_multiple_of(2) { 1 } else { -1 };
                rational(sign * c.pow(e as u32), 1) * quarter_pow(e * sidx)
            }
            NuRecipe::Even => {
                let e = 2 * self.r - 1;
                rational(c.pow(e as u32), 1) * quarter_pow(e * sidx)
            }
            NuRecipe::Cubic => rational(c.pow(2), 1) * quarter_pow(sidx),
        }
    }
}

/// `ν_{sd+t} ≡ μ_s ν_t` modulo `Φ_d(q²)` (or `Φ_d(q)` for the cubic recipe).
pub fn verify_nu_mult(
    recipe: NuRecipe,
    d: u64,
    sidx: u64,
    t: u64,
    r: u64,
    s: u64,
    table: &CycloTable,
) -> Result<CongruenceReport> {
    check_odd(d)?;
    check_t(d, t)?;
    let nu = NuSequence::new(recipe, r, s)?;
    let x = nu.term(sidx * d + t);
    let y = nu.term(t).scale(&nu.mu(sidx));
    let mut params = FamilyParams::default().with_d(d).with_sidx(sidx).with_t(t);
    if recipe != NuRecipe::Cubic {
        params = params.with_r(r).with_s(s);
    }
    congruent(recipe.id(), params, d, recipe.base(), &x, &y, table)
}
