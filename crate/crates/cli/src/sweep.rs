//! Parameter ranges, cell enumeration and the ordered worker pool.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::mpsc;
use std::sync::Arc;

use qcong::cyclofactor::{is_prime, CycloTable};
use qcong::error::Error;
use qcong::families::{verify_cell, Check, Family, Lemma};
use qcong::report::{CongruenceReport, FamilyParams};

/// Inclusive range written `a..b` or a single value `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<u64>);

impl FromStr for Span {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("`{t}`: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Span(lo..=hi))
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.0.start(), self.0.end())
    }
}

/// The ranges supplied on the command line, by parameter name.
#[derive(Debug, Clone, Default)]
pub struct Ranges {
    pub n: Option<Span>,
    pub r: Option<Span>,
    pub s: Option<Span>,
    pub d: Option<Span>,
    pub t: Option<Span>,
    pub k: Option<Span>,
    pub sidx: Option<Span>,
    pub p: Option<Span>,
    pub base: Option<Span>,
}

impl Ranges {
    fn get(&self, name: &str) -> Option<&Span> {
        match name {
            "n" => self.n.as_ref(),
            "r" => self.r.as_ref(),
            "s" => self.s.as_ref(),
            "d" => self.d.as_ref(),
            "t" => self.t.as_ref(),
            "k" => self.k.as_ref(),
            "sidx" => self.sidx.as_ref(),
            "p" => self.p.as_ref(),
            "base" => self.base.as_ref(),
            _ => None,
        }
    }
}

fn set(params: FamilyParams, name: &str, v: u64) -> FamilyParams {
    match name {
        "n" => params.with_n(v),
        "r" => params.with_r(v),
        "s" => params.with_s(v),
        "d" => params.with_d(v),
        "t" => params.with_t(v),
        "k" => params.with_k(v),
        "sidx" => params.with_sidx(v),
        "p" => params.with_p(v),
        "base" => params.with_base(v),
        _ => params,
    }
}

/// Whether a cell satisfies the preconditions of its check. Ranges are
/// clamped to these before anything runs.
pub fn admissible(check: Check, p: &FamilyParams) -> bool {
    let n = p.n.unwrap_or(0);
    let d = p.d.unwrap_or(0);
    let r_ok = p.r.is_none_or(|r| r >= 1);
    let d_ok = d >= 3 && d % 2 == 1;
    let t_ok = p.t.is_none_or(|t| t < d);
    let k_ok = p.k.is_none_or(|k| k <= (d.max(1) - 1) / 2);
    match check {
        Check::Family(f) => match f {
            Family::Ratio3k1 => n % 2 == 1,
            Family::RatioCubic | Family::Series4k1 => n >= 1,
            Family::PAdic4k1 => p.p.is_some_and(|p| p >= 3 && is_prime(p)),
            _ => n >= 2 && r_ok,
        },
        Check::Lemma(Lemma::QbinomFactor) => n >= 2 && p.base.is_some_and(|b| (1..=2).contains(&b)),
        Check::Lemma(_) => d_ok && t_ok && k_ok && r_ok,
    }
}

#[derive(Debug)]
pub enum SweepError {
    MissingRange { check: Check, param: &'static str },
    NoCells(Check),
}

impl fmt::Display for SweepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepError::MissingRange { check, param } => {
                write!(f, "{check} needs --{param}")
            }
            SweepError::NoCells(check) => {
                write!(f, "no admissible parameters for {check} in the given ranges")
            }
        }
    }
}

/// Every admissible cell, checks in the given order, parameters
/// lexicographic in the order the check lists them.
pub fn cells(checks: &[Check], ranges: &Ranges) -> Result<Vec<(Check, FamilyParams)>, SweepError> {
    let mut out = Vec::new();
    for &check in checks {
        let mut partial = vec![FamilyParams::default()];
        for &param in check.params() {
            let span = ranges
                .get(param)
                .ok_or(SweepError::MissingRange { check, param })?;
            partial = partial
                .into_iter()
                .flat_map(|p| span.0.clone().map(move |v| set(p, param, v)))
                .collect();
        }
        let before = out.len();
        out.extend(partial.into_iter().filter(|p| admissible(check, p)).map(|p| (check, p)));
        if out.len() == before {
            return Err(SweepError::NoCells(check));
        }
    }
    Ok(out)
}

pub type CellResult = Result<CongruenceReport, Error>;

/// Runs the cells on `jobs` workers and hands results to `emit` in cell
/// order, whatever order they finish in.
pub fn run(cells: Vec<(Check, FamilyParams)>, jobs: usize, mut emit: impl FnMut(usize, &CellResult)) {
    let table = Arc::new(CycloTable::new());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let (tx, rx) = mpsc::channel();
    for (i, (check, params)) in cells.iter().copied().enumerate() {
        let tx = tx.clone();
        let table = Arc::clone(&table);
        pool.spawn(move || {
            let _ = tx.send((i, verify_cell(check, &params, &table)));
        });
    }
    drop(tx);
    let mut pending = BTreeMap::new();
    let mut next = 0;
    for (i, result) in rx {
        pending.insert(i, result);
        while let Some(result) = pending.remove(&next) {
            emit(next, &result);
            next += 1;
        }
    }
}
