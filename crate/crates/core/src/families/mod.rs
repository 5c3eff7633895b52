//! The sums, their moduli, and the verifiers that bind them.
//!
//! Every check is addressed by a stable string id. [`Family`] covers the
//! main sums and their integer, p-adic and analytic shadows; [`Lemma`]
//! covers the congruences used along the way. [`verify_cell`] dispatches
//! any id.

mod integer;
mod lemmas;
pub mod summands;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

pub use integer::{
    ramanujan_partial, ramanujan_partials, sum_3k1, sum_4k1, van_hamme_sum, verify_int_3k1,
    verify_int_4k1, verify_ramanujan, verify_van_hamme, TWO_OVER_PI,
};
pub use lemmas::{
    verify_aux_dminus1, verify_half_sum, verify_lemma21, verify_lemma23, verify_lemma31,
    verify_nu_mult, verify_pair_cancellation, verify_sum_to_0, HalfSum, NuRecipe, NuSequence,
};

use crate::bigpoly::{LaurentPoly, RatFun};
use crate::congruence::{factorwise_divisible, fraction_divisible};
use crate::cyclofactor::{divisors, verify_qbinom_factorization, CycloProduct, CycloTable, Fraction};
use crate::error::{Error, Result};
use crate::report::{CongruenceReport, FamilyParams, Verdict};

type P = CycloProduct;

/// The main sums and their specialisations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `Σ (-1)^k q^{k²+(r-2)k} [4k+1] [2k,k]^{2r-1} (-q^{k+1};q)^{4r-2}_{n-k-1}`
    /// modulo `(1+q^{n-1})^{2r-2} [n] [2n-1,n-1]`.
    Alt4k1,
    /// `(1+q^{n-1})^{-1} Σ q^{(r-2)k} [4k+1] [2k,k]^{2r} (-q^{k+1};q)^{4r}_{n-k-1}`,
    /// same modulus.
    Even4k1,
    /// Base-`q²` version of [`Family::Alt4k1`] with `[4k+1]^{2s} [4k+1]_{q²}`.
    Alt4k1Sq,
    /// Base-`q²` version of [`Family::Even4k1`].
    Even4k1Sq,
    /// `Σ [3k+1] (q;q²)_k³ q^{-C(k+1,2)} / ((q;q)_k² (q²;q²)_k) ≡ [n] q^{(1-n)/2}`
    /// modulo `[n] Φ_n(q)²`, `n` odd.
    Ratio3k1,
    /// `Σ [3k+1] [2k,k]³ (-q^{k+1};q)⁴_{n-k-1} q^{-C(k+1,2)}` modulo
    /// `(1+q^{n-1})² [n] [2n-1,n-1]`.
    Central3k1,
    /// Alternating sum with weights `((q²;q⁴)_k/(q⁴;q⁴)_k)^{2r-1}` modulo
    /// `A_n(q²) C_n(q²)`.
    RatioAltSq,
    /// Non-alternating sum with weights `((q²;q⁴)_k/(q⁴;q⁴)_k)^{2r}`.
    RatioEvenSq,
    /// `Σ q^{-C(k+1,2)} [3k+1] (q;q²)_k³ (-q;q)_k² / (q²;q²)_k³` modulo
    /// `A_n(q) C_n(q)`.
    RatioCubic,
    /// `4 Σ (4k+1)^{2s+1} C(2k,k)^r (-4)^{r(n-k-1)}` modulo `2^r n C(2n,n)`.
    Int4k1,
    /// `Σ (3k+1) C(2k,k)³ 16^{n-k-1}` modulo `2n C(2n,n)`.
    Int3k1,
    /// `Σ_{k ≤ (p-1)/2} (4k+1) C(2k,k)³ / (-64)^k ≡ p(-1)^{(p-1)/2}` mod `p³`.
    PAdic4k1,
    /// Partial sums of `Σ (4k+1) C(2k,k)³ / (-64)^k` bracket `2/π`.
    Series4k1,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Alt4k1,
        Family::Even4k1,
        Family::Alt4k1Sq,
        Family::Even4k1Sq,
        Family::Ratio3k1,
        Family::Central3k1,
        Family::RatioAltSq,
        Family::RatioEvenSq,
        Family::RatioCubic,
        Family::Int4k1,
        Family::Int3k1,
        Family::PAdic4k1,
        Family::Series4k1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::Alt4k1 => "alt-4k1",
            Family::Even4k1 => "even-4k1",
            Family::Alt4k1Sq => "alt-4k1-sq",
            Family::Even4k1Sq => "even-4k1-sq",
            Family::Ratio3k1 => "ratio-3k1",
            Family::Central3k1 => "central-3k1",
            Family::RatioAltSq => "ratio-alt-sq",
            Family::RatioEvenSq => "ratio-even-sq",
            Family::RatioCubic => "ratio-cubic",
            Family::Int4k1 => "int-4k1",
            Family::Int3k1 => "int-3k1",
            Family::PAdic4k1 => "padic-4k1",
            Family::Series4k1 => "series-4k1",
        }
    }

    /// Parameters the family reads.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::Alt4k1 | Family::Even4k1 => &["n", "r"],
            Family::Alt4k1Sq | Family::Even4k1Sq => &["n", "r", "s"],
            Family::RatioAltSq | Family::RatioEvenSq | Family::Int4k1 => &["n", "r", "s"],
            Family::Ratio3k1 | Family::Central3k1 | Family::RatioCubic | Family::Int3k1 => &["n"],
            Family::PAdic4k1 => &["p"],
            Family::Series4k1 => &["n"],
        }
    }

    /// Whether the family is a q-series sum with a polynomial modulus.
    pub fn is_q_family(self) -> bool {
        !matches!(self, Family::Int4k1 | Family::Int3k1 | Family::PAdic4k1 | Family::Series4k1)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

fn need(v: Option<u64>, name: &str) -> Result<u64> {
    v.ok_or_else(|| Error::ParamOutOfRange(format!("parameter {name} is required")))
}

fn at_least(v: u64, min: u64, name: &str) -> Result<u64> {
    if v < min {
        return Err(Error::ParamOutOfRange(format!("{name} = {v} must be >= {min}")));
    }
    Ok(v)
}

/// Parameters read by a q-family, validated.
struct Qp {
    n: u64,
    r: u64,
    s: u64,
}

fn q_params(family: Family, params: &FamilyParams) -> Result<Qp> {
    let n = need(params.n, "n")?;
    let uses = family.params();
    let r = if uses.contains(&"r") { at_least(need(params.r, "r")?, 1, "r")? } else { 0 };
    let s = if uses.contains(&"s") { need(params.s, "s")? } else { 0 };
    match family {
        Family::Ratio3k1 => {
            at_least(n, 1, "n")?;
            if n % 2 == 0 {
                return Err(Error::ParamOutOfRange(format!("n = {n} must be odd")));
            }
        }
        Family::RatioCubic => {
            at_least(n, 1, "n")?;
        }
        _ => {
            at_least(n, 2, "n")?;
        }
    }
    Ok(Qp { n, r, s })
}

/// Summands of a q-family. For [`Family::Ratio3k1`] the right side
/// `[n] q^{(1-n)/2}` is appended with a minus sign.
pub fn terms(family: Family, params: &FamilyParams) -> Result<Vec<P>> {
    if !family.is_q_family() {
        return Err(Error::ParamOutOfRange(format!("{family} is not a q-series family")));
    }
    let Qp { n, r, s } = q_params(family, params)?;
    let ks = 0..n;
    let out = match family {
        Family::Alt4k1 => ks.map(|k| summands::alt_4k1(n, r, k)).collect(),
        Family::Even4k1 => ks.map(|k| summands::even_4k1(n, r, k)).collect(),
        Family::Alt4k1Sq => ks.map(|k| summands::alt_4k1_sq(n, r, s, k)).collect(),
        Family::Even4k1Sq => ks.map(|k| summands::even_4k1_sq(n, r, s, k)).collect(),
        Family::Central3k1 => ks.map(|k| summands::central_3k1(n, k)).collect(),
        Family::RatioAltSq => ks.map(|k| summands::ratio_alt_sq(r, s, k)).collect(),
        Family::RatioEvenSq => ks.map(|k| summands::ratio_even_sq(r, s, k)).collect(),
        Family::RatioCubic => ks.map(summands::ratio_cubic).collect(),
        Family::Ratio3k1 => {
            let mut v: Vec<P> = ks.map(summands::ratio_3k1).collect();
            let shift = (1 - n as i64) / 2;
            v.push(-&(P::q_integer(n, 1) * P::monomial(shift)));
            v
        }
        _ => unreachable!(),
    };
    Ok(out)
}

/// The modulus the sum is checked against, in factored form. Prefactors
/// `1/(1+q^a)` are folded in, so the plain sum is tested.
pub fn modulus(family: Family, params: &FamilyParams) -> Result<P> {
    let Qp { n, r, .. } = q_params(family, params)?;
    let r = r as i64;
    Ok(match family {
        Family::Alt4k1 => summands::binomial_modulus(n, 1, 2 * r - 2),
        Family::Even4k1 => summands::binomial_modulus(n, 1, 2 * r - 1),
        Family::Alt4k1Sq => summands::binomial_modulus(n, 2, 2 * r - 2),
        Family::Even4k1Sq => summands::binomial_modulus(n, 2, 2 * r - 1),
        Family::Central3k1 => summands::binomial_modulus(n, 1, 2),
        Family::RatioAltSq | Family::RatioEvenSq => summands::ac_modulus(n, 2),
        Family::RatioCubic => summands::ac_modulus(n, 1),
        Family::Ratio3k1 => P::q_integer(n, 1) * P::cyclotomic(n).pow(2),
        _ => return Err(Error::ParamOutOfRange(format!("{family} has no polynomial modulus"))),
    })
}

/// `(Φ_d, multiplicity)` demanded of `[n] Φ_n²`: 3 for `Φ_n`, 1 for the
/// other divisors `d > 1`, and `Φ_1²` when `n = 1`.
pub fn ratio_3k1_requirements(n: u64) -> Vec<(u64, u32)> {
    if n == 1 {
        return vec![(1, 2)];
    }
    divisors(n)
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| (d, if d == n { 3 } else { 1 }))
        .collect()
}

/// The left-hand side of a q-family.
#[derive(Debug, Clone, PartialEq)]
pub enum Lhs {
    Laurent(LaurentPoly),
    Rational(RatFun),
}

/// The exact sum: a Laurent polynomial when every summand is one, a
/// reduced rational function otherwise. For the families with a
/// `1/(1+q^a)` prefactor this is the sum without it; for
/// [`Family::Ratio3k1`] the right side is subtracted.
pub fn build_lhs(family: Family, params: &FamilyParams, table: &CycloTable) -> Result<Lhs> {
    let frac = P::sum(&terms(family, params)?)?;
    Ok(match frac.to_laurent() {
        Some(l) => Lhs::Laurent(l),
        None => Lhs::Rational(frac.reduce(table)?),
    })
}

fn timed(
    family: Family,
    params: &FamilyParams,
    start: Instant,
    frac: &Fraction,
    verdict: Verdict,
    modulus_degree: Option<usize>,
) -> CongruenceReport {
    let mut report = CongruenceReport::new(family.id(), *params, verdict);
    match frac.to_laurent() {
        Some(l) => report = report.with_lhs(&l),
        None => {
            report.lhs_degree = frac.numerator.degree().map(|d| d as i64);
            report.valuation = frac.numerator.low_degree().map(|d| d as i64);
        }
    }
    report.modulus_degree = modulus_degree;
    report.with_elapsed(start.elapsed())
}

/// Verifies one parameter cell of a family.
///
/// q-families are decided by a single exact division of the summed
/// numerator by the expanded modulus, after certifying from the factored
/// denominators that no summand has a pole at a root of the modulus.
/// [`Family::Ratio3k1`] is decided factor by factor.
pub fn verify_family(
    family: Family,
    params: &FamilyParams,
    table: &CycloTable,
) -> Result<CongruenceReport> {
    let start = Instant::now();
    match family {
        Family::Int4k1 => {
            return verify_int_4k1(need(params.n, "n")?, need(params.r, "r")?, need(params.s, "s")?)
        }
        Family::Int3k1 => return verify_int_3k1(need(params.n, "n")?),
        Family::PAdic4k1 => return verify_van_hamme(need(params.p, "p")?),
        Family::Series4k1 => return verify_ramanujan(need(params.n, "n")?),
        _ => {}
    }
    let params = restrict(family, params);
    let frac = P::sum(&terms(family, &params)?)?;
    let m = modulus(family, &params)?;
    let verdict = if family == Family::Ratio3k1 {
        factorwise_divisible(&frac, &ratio_3k1_requirements(params.n.unwrap()), table)
    } else {
        fraction_divisible(&frac, &m, table)?
    };
    let degree = m.degree();
    Ok(timed(family, &params, start, &frac, verdict, Some(degree as usize)))
}

/// Per-cyclotomic-factor diagnostic: for every `Φ_d^m` in the modulus,
/// the multiplicity of `Φ_d` in the summed numerator.
pub fn verify_family_factorwise(
    family: Family,
    params: &FamilyParams,
    table: &CycloTable,
) -> Result<CongruenceReport> {
    let start = Instant::now();
    let params = restrict(family, params);
    let frac = P::sum(&terms(family, &params)?)?;
    let m = modulus(family, &params)?;
    let required: Vec<(u64, u32)> = if family == Family::Ratio3k1 {
        ratio_3k1_requirements(params.n.unwrap())
    } else {
        m.factors().map(|(d, e)| (d, e as u32)).collect()
    };
    let verdict = factorwise_divisible(&frac, &required, table);
    Ok(timed(family, &params, start, &frac, verdict, Some(m.degree() as usize)))
}

/// Drops the fields a family does not read.
pub fn restrict(family: Family, params: &FamilyParams) -> FamilyParams {
    let uses = family.params();
    let keep = |name: &str, v: Option<u64>| if uses.contains(&name) { v } else { None };
    FamilyParams {
        n: keep("n", params.n),
        r: keep("r", params.r),
        s: keep("s", params.s),
        p: keep("p", params.p),
        ..FamilyParams::default()
    }
}

/// Congruences from inside the proofs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma {
    /// `(q;q²)_{sd+t}/(q²;q²)_{sd+t} ≡ 4^{-s} C(2s,s) (q;q²)_t/(q²;q²)_t` mod `Φ_d(q)`.
    Lucas,
    /// Reflection `k ↔ (d-1)/2 - k` of `(q;q²)_k/(q²;q²)_k` mod `Φ_d(q)`.
    Reflection,
    /// `(-q;q)_{sd+t} ≡ 2^s (-q;q)_t` mod `Φ_d(q)`.
    NegpochShift,
    /// `(-q;q)_{d-1} ≡ 1` mod `Φ_d(q)`.
    NegpochPeriod,
    HalfSum,
    HalfSumEven,
    HalfSumCubic,
    PairCancel,
    NuAlt,
    NuEven,
    NuCubic,
    /// `[n][2n-1,n-1]` in `q^base` equals its cyclotomic decomposition.
    QbinomFactor,
}

impl Lemma {
    pub const ALL: [Lemma; 12] = [
        Lemma::Lucas,
        Lemma::Reflection,
        Lemma::NegpochShift,
        Lemma::NegpochPeriod,
        Lemma::HalfSum,
        Lemma::HalfSumEven,
        Lemma::HalfSumCubic,
        Lemma::PairCancel,
        Lemma::NuAlt,
        Lemma::NuEven,
        Lemma::NuCubic,
        Lemma::QbinomFactor,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Lemma::Lucas => "lucas",
            Lemma::Reflection => "reflection",
            Lemma::NegpochShift => "negpoch-shift",
            Lemma::NegpochPeriod => "negpoch-period",
            Lemma::HalfSum => "half-sum",
            Lemma::HalfSumEven => "half-sum-even",
            Lemma::HalfSumCubic => "half-sum-cubic",
            Lemma::PairCancel => "pair-cancel",
            Lemma::NuAlt => "nu-alt",
            Lemma::NuEven => "nu-even",
            Lemma::NuCubic => "nu-cubic",
            Lemma::QbinomFactor => "qbinom-factor",
        }
    }

    pub fn params(self) -> &'static [&'static str] {
        match self {
            Lemma::Lucas | Lemma::NegpochShift | Lemma::NuCubic => &["d", "sidx", "t"],
            Lemma::Reflection => &["d", "k"],
            Lemma::NegpochPeriod | Lemma::HalfSumCubic => &["d"],
            Lemma::HalfSum | Lemma::HalfSumEven => &["d", "r", "s"],
            Lemma::PairCancel => &["d", "k", "r", "s"],
            Lemma::NuAlt | Lemma::NuEven => &["d", "sidx", "t", "r", "s"],
            Lemma::QbinomFactor => &["n", "base"],
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Lemma {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

pub fn verify_lemma(lemma: Lemma, params: &FamilyParams, table: &CycloTable) -> Result<CongruenceReport> {
    let d = || need(params.d, "d");
    let sidx = || need(params.sidx, "sidx");
    let t = || need(params.t, "t");
    let k = || need(params.k, "k");
    let r = || need(params.r, "r");
    let s = || need(params.s, "s");
    match lemma {
        Lemma::Lucas => verify_lemma21(d()?, sidx()?, t()?, table),
        Lemma::Reflection => verify_lemma23(d()?, k()?, table),
        Lemma::NegpochShift => verify_lemma31(d()?, sidx()?, t()?, table),
        Lemma::NegpochPeriod => verify_aux_dminus1(d()?, table),
        Lemma::HalfSum => verify_half_sum(HalfSum::Alternating, d()?, r()?, s()?, table),
        Lemma::HalfSumEven => verify_half_sum(HalfSum::Even, d()?, r()?, s()?, table),
        Lemma::HalfSumCubic => verify_half_sum(HalfSum::Cubic, d()?, 0, 0, table),
        Lemma::PairCancel => verify_pair_cancellation(d()?, k()?, r()?, s()?, table),
        Lemma::NuAlt => verify_nu_mult(NuRecipe::Alternating, d()?, sidx()?, t()?, r()?, s()?, table),
        Lemma::NuEven => verify_nu_mult(NuRecipe::Even, d()?, sidx()?, t()?, r()?, s()?, table),
        Lemma::NuCubic => verify_nu_mult(NuRecipe::Cubic, d()?, sidx()?, t()?, 0, 0, table),
        Lemma::QbinomFactor => {
            let n = at_least(need(params.n, "n")?, 2, "n")?;
            let base = need(params.base, "base")?;
            if !(1..=2).contains(&base) {
                return Err(Error::ParamOutOfRange(format!("base = {base} must be 1 or 2")));
            }
            Ok(verify_qbinom_factorization(n, base, table))
        }
    }
}

/// Any addressable check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Family(Family),
    Lemma(Lemma),
}

impl Check {
    pub fn all() -> impl Iterator<Item = Check> {
        Family::ALL
            .into_iter()
            .map(Check::Family)
            .chain(Lemma::ALL.into_iter().map(Check::Lemma))
    }

    pub fn id(self) -> &'static str {
        match self {
            Check::Family(f) => f.id(),
            Check::Lemma(l) => l.id(),
        }
    }

    pub fn params(self) -> &'static [&'static str] {
        match self {
            Check::Family(f) => f.params(),
            Check::Lemma(l) => l.params(),
        }
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::all()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Runs one cell of any check.
pub fn verify_cell(check: Check, params: &FamilyParams, table: &CycloTable) -> Result<CongruenceReport> {
    match check {
        Check::Family(f) => verify_family(f, params, table),
        Check::Lemma(l) => verify_lemma(l, params, table),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigpoly::IntPoly;
    use crate::report::Witness;

    fn fp() -> FamilyParams {
        FamilyParams::default()
    }

    #[test]
    fn ids_round_trip() {
        for c in Check::all() {
            assert_eq!(c.id().parse::<Check>().unwrap(), c);
        }
        assert!(matches!("no-such-check".parse::<Check>(), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn build_lhs_examples() {
        let t = CycloTable::new();
        let p = IntPoly::from_i64s;
        let Lhs::Laurent(l) = build_lhs(Family::Central3k1, &fp().with_n(2), &t).unwrap() else {
            panic!()
        };
        assert_eq!(l, LaurentPoly::new(&p(&[1, 1]).pow(4) * &p(&[1, 1, 1]), -1));
        let params = fp().with_n(2).with_r(1).with_s(0);
        let Lhs::Laurent(l) = build_lhs(Family::Alt4k1Sq, &params, &t).unwrap() else {
            panic!()
        };
        assert_eq!(l, LaurentPoly::new(-&(&p(&[1, 0, 1]) * &p(&[1, 0, 1, 0, 1])), 4));
        assert!(matches!(
            build_lhs(Family::RatioCubic, &fp().with_n(3), &t).unwrap(),
            Lhs::Rational(_)
        ));
        assert!(build_lhs(Family::Ratio3k1, &fp().with_n(4), &t).is_err());
        assert!(build_lhs(Family::Central3k1, &fp().with_n(1), &t).is_err());
    }

    #[test]
    fn verify_examples() {
        let t = CycloTable::new();
        let r = verify_family(Family::Central3k1, &fp().with_n(2), &t).unwrap();
        assert!(r.holds);
        assert_eq!(
            r.witness,
            Witness::Quotient(LaurentPoly::new(IntPoly::from_i64s(&[1, 1]), -1))
        );
        let params = fp().with_n(2).with_r(1).with_s(0);
        let r = verify_family(Family::Alt4k1Sq, &params, &t).unwrap();
        assert!(r.holds);
        assert_eq!(r.witness, Witness::Quotient(LaurentPoly::monomial(-1, 4)));
        assert_eq!(r.modulus_degree, Some(6));
        assert!(verify_family(Family::Ratio3k1, &fp().with_n(1), &t).unwrap().holds);
        for n in (1..=9).step_by(2) {
            assert!(verify_family(Family::Ratio3k1, &fp().with_n(n), &t).unwrap().holds);
        }
    }

    #[test]
    fn small_grid_holds() {
        let t = CycloTable::new();
        for n in 2..=5 {
            for r in 1..=2 {
                for s in 0..=1 {
                    let params = fp().with_n(n).with_r(r).with_s(s);
                    for f in Family::ALL.into_iter().filter(|f| f.is_q_family()) {
                        if f == Family::Ratio3k1 && n % 2 == 0 {
                            continue;
                        }
                        let rep = verify_family(f, &params, &t).unwrap();
                        assert!(rep.holds, "{f} {params}");
                    }
                }
            }
        }
    }

    #[test]
    fn a_wrong_modulus_is_rejected() {
        let t = CycloTable::new();
        let params = fp().with_n(4).with_r(2);
        let frac = P::sum(&terms(Family::Alt4k1, &params).unwrap()).unwrap();
        let too_big = modulus(Family::Alt4k1, &params).unwrap() * P::cyclotomic(7);
        assert!(!fraction_divisible(&frac, &too_big, &t).unwrap().holds);
    }
}
