//! Exhaustive verification sweeps over ranges of word lengths and `m`.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::bitword::BinaryWord;
use crate::encoding::{check_conjugacy, decompose_space_with, orbit_size, DecomposeOptions};
use crate::error::{Error, Result};
use crate::orbitstats::{check_corollary_column_sums, check_lemma_identities, theorem1_on_orbit};
use crate::par::{map_range, map_slice, Execution};
use crate::report::{CheckReport, Verdict};
use crate::rotation::orbit;
use crate::toggle::{
    check_orbit_bijection, check_phi_symmetry, check_snake_rotation, check_snaketail,
    check_z_symmetry, column_sums_via_frequency, enumerate_x, enumerate_z, orbit_board,
    phi_orbit_size_fast,
};

/// Failure witnesses kept per sweep.
pub const MAX_WITNESSES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scope {
    Theorem1,
    Lemmas,
    Corollary,
    Conjugacy,
    OrbitSize,
    Snake,
    Snaketail,
    PhiSymmetry,
    ColumnFrequency,
    FastSize,
    Bijection,
    ZConjecture,
}

impl Scope {
    pub const ALL: [Scope; 12] = [
        Scope::Theorem1,
        Scope::Lemmas,
        Scope::Corollary,
        Scope::Conjugacy,
        Scope::OrbitSize,
        Scope::Snake,
        Scope::Snaketail,
        Scope::PhiSymmetry,
        Scope::ColumnFrequency,
        Scope::FastSize,
        Scope::Bijection,
        Scope::ZConjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::Theorem1 => "theorem1",
            Scope::Lemmas => "lemmas",
            Scope::Corollary => "corollary",
            Scope::Conjugacy => "conjugacy",
            Scope::OrbitSize => "orbit-size",
            Scope::Snake => "snake",
            Scope::Snaketail => "snaketail",
            Scope::PhiSymmetry => "phi-symmetry",
            Scope::ColumnFrequency => "column-frequency",
            Scope::FastSize => "fast-size",
            Scope::Bijection => "bijection",
            Scope::ZConjecture => "z-conjecture",
        }
    }

    /// True for scopes whose words live in `X_N` or `Z_N`.
    pub fn is_toggle(self) -> bool {
        matches!(
            self,
            Scope::Snake
                | Scope::Snaketail
                | Scope::PhiSymmetry
                | Scope::ColumnFrequency
                | Scope::FastSize
                | Scope::Bijection
                | Scope::ZConjecture
        )
    }

    /// Conjectural scopes are reported as empirical evidence only.
    pub fn is_experimental(self) -> bool {
        self == Scope::ZConjecture
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Scope::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Scope::ALL.iter().map(|s| s.name()).collect();
                format!("unknown scope '{s}' (expected one of {})", names.join(", "))
            })
    }
}

/// Outcome of one `(n, m)` cell of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSummary {
    pub n: usize,
    pub m: usize,
    pub cases: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub scope: Scope,
    pub cells: Vec<CellSummary>,
    pub witnesses: Vec<String>,
}

impl SweepSummary {
    pub fn cases(&self) -> usize {
        self.cells.iter().map(|c| c.cases).sum()
    }

    pub fn failed(&self) -> usize {
        self.cells.iter().map(|c| c.failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.failed() == 0
    }
}

/// Parses `"a..b"` (inclusive) or a single number.
pub fn parse_range(text: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid range '{text}'"))
    };
    let range = match text.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            num(lo)?..=num(hi)?
        }
        None => {
            let v = num(text)?;
            v..=v
        }
    };
    if range.start() > range.end() {
        return Err(format!("empty range '{text}'"));
    }
    Ok(range)
}

fn all_words(n: usize) -> Result<Vec<BinaryWord>> {
    if n > 24 {
        return Err(Error::SizeCap { size: n, cap: 24 });
    }
    Ok((0..(1u64 << n))
        .map(|i| BinaryWord::from_index(i, n))
        .collect())
}

/// Runs one cell and returns `(cases, failure witnesses)`.
fn run_cell(scope: Scope, n: usize, m: usize, exec: Execution) -> Result<(usize, Vec<String>)> {
    let reports: Vec<Result<CheckReport>> = match scope {
        Scope::Theorem1 | Scope::OrbitSize => {
            let opts = DecomposeOptions {
                exec,
                ..Default::default()
            };
            let reps = decompose_space_with(n, m, opts)?;
            map_slice(exec, &reps, |o| {
                let orb = orbit(&o.representative, m)?;
                if scope == Scope::Theorem1 {
                    return Ok(theorem1_on_orbit(&orb, m));
                }
                let mut report = CheckReport::new("orbit-size", o.representative.to_string(), m);
                for w in orb.words() {
                    report.push(Verdict::compare(
                        "period(rw) * period(bqw) = |orbit|",
                        None,
                        &orbit_size(w, m)?,
                        &orb.size(),
                    ));
                }
                Ok(report)
            })
        }
        Scope::Lemmas | Scope::Corollary | Scope::Conjugacy => {
            let words = all_words(n)?;
            map_slice(exec, &words, |w| match scope {
                Scope::Lemmas => check_lemma_identities(w, m),
                Scope::Corollary => check_corollary_column_sums(w, m),
                _ => check_conjugacy(w, m),
            })
        }
        Scope::ZConjecture => {
            let words = enumerate_z(n, m)?;
            map_slice(exec, &words, |z| check_z_symmetry(z, m))
        }
        Scope::Bijection => vec![check_orbit_bijection(n, m)],
        _ => {
            let words = enumerate_x(n, m)?;
            map_slice(exec, &words, |s| match scope {
                Scope::Snake => check_snake_rotation(s),
                Scope::Snaketail => check_snaketail(s),
                Scope::PhiSymmetry => check_phi_symmetry(s),
                Scope::ColumnFrequency => {
                    let direct = orbit_board(s)?.column_sums();
                    let mut r = CheckReport::new("column-frequency", s.to_string(), m);
                    r.push(Verdict::compare(
                        "frequency column sums = board column sums",
                        None,
                        &column_sums_via_frequency(s)?,
                        &direct,
                    ));
                    Ok(r)
                }
                _ => {
                    let mut r = CheckReport::new("fast-size", s.to_string(), m);
                    r.push(Verdict::compare(
                        "fast size = board rows",
                        None,
                        &phi_orbit_size_fast(s)?,
                        &orbit_board(s)?.q(),
                    ));
                    Ok(r)
                }
            })
        }
    };
    let cases = reports.len();
    let mut witnesses = Vec::new();
    for r in reports {
        match r {
            Ok(rep) if rep.passed() => {}
            Ok(rep) => witnesses.push(rep.to_string()),
            Err(e) => witnesses.push(format!("n={n} m={m}: {e}")),
        }
    }
    Ok((cases, witnesses))
}

/// Whether `(n, m)` is inside the domain of `scope`. The tail-offset check
/// needs a column at distance `m` or more from the last one.
pub fn in_domain(scope: Scope, n: usize, m: usize) -> bool {
    n >= 1
        && m >= 1
        && match scope {
            Scope::ZConjecture => true,
            Scope::Snaketail => n > m,
            _ => m <= n,
        }
}

/// Runs `scope` over every `(n, m)` in the given ranges that lies in its
/// domain. Cells parallelize internally; the cells themselves run in order.
pub fn run_sweep(
    scope: Scope,
    ns: RangeInclusive<usize>,
    ms: RangeInclusive<usize>,
    exec: Execution,
) -> Result<SweepSummary> {
    let mut summary = SweepSummary {
        scope,
        cells: Vec::new(),
        witnesses: Vec::new(),
    };
    for n in ns {
        for m in ms.clone() {
            if !in_domain(scope, n, m) {
                continue;
            }
            let (cases, witnesses) = run_cell(scope, n, m, exec)?;
            summary.cells.push(CellSummary {
                n,
                m,
                cases,
                failed: witnesses.len(),
            });
            let room = MAX_WITNESSES.saturating_sub(summary.witnesses.len());
            summary.witnesses.extend(witnesses.into_iter().take(room));
        }
    }
    Ok(summary)
}

/// Orbit sizes by brute force for every word of length `n`, in
/// lexicographic order.
pub fn brute_orbit_sizes(n: usize, m: usize, exec: Execution) -> Result<Vec<usize>> {
    all_words(n)?;
    crate::rotation::RotationParams::new(m, n)?;
    Ok(map_range(exec, 0..(1u64 << n), |i| {
        orbit(&BinaryWord::from_index(i, n), m)
            .expect("m checked")
            .size()
    }))
}
