//! The toggle dynamical system `(X_N, φ)` and its snakes.
//!
//! `X_N` holds the words of length `N` in which any two ones are more than
//! `m` positions apart. `τ_i` flips letter `i` when the result stays in the
//! state space and `φ` applies `τ_0, τ_1, ..., τ_{N-1}` in that order.
//!
//! Boards here are over `X_L` with columns `0..L`. A snake runs from column
//! 0 to column `L - 1`, its composition sums to `L - 1` and its tilde word
//! lies in `Y_{L-1}`.
//!
//! `Z_N` (no `m + 1` consecutive ones) reuses the same sweep with a
//! different membership test. Its symmetry is only checked empirically.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::bitword::{leading_ones, BinaryWord, Composition};
use crate::encoding::{encode, EncodedPair, OrbitSummary};
use crate::error::{Error, Result};
use crate::orbitstats::FrequencyTable;
use crate::par::{map_slice, Execution};
use crate::report::{CheckReport, Verdict};
use crate::rotation::{orbit_limit, orbit_relaxed, rotate_slice, RotationParams};

/// Largest `N` accepted by the enumerators.
pub const ENUMERATION_CAP: usize = 32;

/// Which membership test the toggles use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StateSpace {
    /// `X_N`: any two ones are more than `m` apart.
    Spread,
    /// `Z_N`: no run of `m + 1` ones.
    Bounded,
}

impl StateSpace {
    fn contains(self, bits: &[u8], m: usize) -> bool {
        match self {
            StateSpace::Spread => spread_violation(bits, m).is_none(),
            StateSpace::Bounded => long_run(bits, m).is_none(),
        }
    }

    /// Whether letter `i` (currently 0) may become 1.
    fn can_set(self, bits: &[u8], i: usize, m: usize) -> bool {
        match self {
            StateSpace::Spread => {
                let lo = i.saturating_sub(m);
                let hi = (i + m).min(bits.len() - 1);
                (lo..=hi).all(|k| k == i || bits[k] == 0)
            }
            StateSpace::Bounded => {
                let left = bits[..i].iter().rev().take_while(|&&b| b == 1).count();
                let right = bits[i + 1..].iter().take_while(|&&b| b == 1).count();
                left + right < m
            }
        }
    }

    fn toggle(self, bits: &mut [u8], i: usize, m: usize) {
        if bits[i] == 1 {
            bits[i] = 0;
        } else if self.can_set(bits, i, m) {
            bits[i] = 1;
        }
    }

    fn sweep(self, bits: &mut [u8], m: usize) {
        for i in 0..bits.len() {
            self.toggle(bits, i, m);
        }
    }
}

/// First pair of ones at distance at most `m`.
fn spread_violation(bits: &[u8], m: usize) -> Option<(usize, usize)> {
    let mut last: Option<usize> = None;
    for (i, &b) in bits.iter().enumerate() {
        if b == 1 {
            if let Some(p) = last {
                if i - p <= m {
                    return Some((p, i));
                }
            }
            last = Some(i);
        }
    }
    None
}

/// Start of the first run of at least `m + 1` ones.
fn long_run(bits: &[u8], m: usize) -> Option<usize> {
    let mut run = 0;
    for (i, &b) in bits.iter().enumerate() {
        run = if b == 1 { run + 1 } else { 0 };
        if run > m {
            return Some(i + 1 - run);
        }
    }
    None
}

/// A member of `X_N` together with its parameter `m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToggleWord {
    word: BinaryWord,
    m: usize,
}

impl ToggleWord {
    pub fn new(word: BinaryWord, m: usize) -> Result<Self> {
        RotationParams::new(m, word.len())?;
        if let Some((first, second)) = spread_violation(word.bits(), m) {
            return Err(Error::NotSpread { first, second, m });
        }
        Ok(ToggleWord { word, m })
    }

    pub fn parse(text: &str, m: usize) -> Result<Self> {
        Self::new(BinaryWord::parse(text)?, m)
    }

    pub fn word(&self) -> &BinaryWord {
        &self.word
    }

    pub fn bits(&self) -> &[u8] {
        self.word.bits()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn with_bits(&self, bits: Vec<u8>) -> Self {
        ToggleWord {
            word: BinaryWord::from_valid(bits),
            m: self.m,
        }
    }
}

impl fmt::Display for ToggleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

impl fmt::Debug for ToggleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(m={})", self.word, self.m)
    }
}

fn check_enum_size(n: usize) -> Result<()> {
    if n > ENUMERATION_CAP {
        return Err(Error::SizeCap {
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

fn enumerate_space(n: usize, m: usize, space: StateSpace) -> Vec<Vec<u8>> {
    // Depth-first with 0 before 1 yields lexicographic order; the state is
    // the distance back to the last one (Spread) or the current run (Bounded).
    fn rec(
        n: usize,
        m: usize,
        space: StateSpace,
        cur: &mut Vec<u8>,
        state: usize,
        out: &mut Vec<Vec<u8>>,
    ) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        cur.push(0);
        let zero_state = match space {
            StateSpace::Spread => state.saturating_add(1),
            StateSpace::Bounded => 0,
        };
        rec(n, m, space, cur, zero_state, out);
        cur.pop();
        let (allowed, one_state) = match space {
            StateSpace::Spread => (state > m, 1),
            StateSpace::Bounded => (state < m, state + 1),
        };
        if allowed {
            cur.push(1);
            rec(n, m, space, cur, one_state, out);
            cur.pop();
        }
    }
    let start = match space {
        StateSpace::Spread => usize::MAX,
        StateSpace::Bounded => 0,
    };
    let mut out = Vec::new();
    rec(n, m, space, &mut Vec::with_capacity(n), start, &mut out);
    out
}

/// All of `X_N` in lexicographic order.
pub fn enumerate_x(n: usize, m: usize) -> Result<Vec<ToggleWord>> {
    RotationParams::new(m, n)?;
    check_enum_size(n)?;
    Ok(enumerate_space(n, m, StateSpace::Spread)
        .into_iter()
        .map(|bits| ToggleWord {
            word: BinaryWord::from_valid(bits),
            m,
        })
        .collect())
}

/// All of `Z_N` in lexicographic order.
pub fn enumerate_z(n: usize, m: usize) -> Result<Vec<BinaryWord>> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    if m == 0 {
        return Err(Error::MOutOfRange { m, n });
    }
    check_enum_size(n)?;
    Ok(enumerate_space(n, m, StateSpace::Bounded)
        .into_iter()
        .map(BinaryWord::from_valid)
        .collect())
}

pub fn is_in_z(w: &BinaryWord, m: usize) -> bool {
    StateSpace::Bounded.contains(w.bits(), m)
}

fn check_z(z: &BinaryWord, m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::MOutOfRange { m, n: z.len() });
    }
    if let Some(start) = long_run(z.bits(), m) {
        return Err(Error::LongRun {
            start,
            m_plus_one: m + 1,
        });
    }
    Ok(())
}

pub fn toggle_at(w: &ToggleWord, i: usize) -> Result<ToggleWord> {
    if i >= w.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: w.len(),
        });
    }
    let mut bits = w.bits().to_vec();
    StateSpace::Spread.toggle(&mut bits, i, w.m);
    Ok(w.with_bits(bits))
}

pub fn phi(w: &ToggleWord) -> ToggleWord {
    let mut bits = w.bits().to_vec();
    StateSpace::Spread.sweep(&mut bits, w.m);
    w.with_bits(bits)
}

/// `φ` on `Z_N`.
pub fn phi_z(z: &BinaryWord, m: usize) -> Result<BinaryWord> {
    check_z(z, m)?;
    let mut bits = z.bits().to_vec();
    StateSpace::Bounded.sweep(&mut bits, m);
    Ok(BinaryWord::from_valid(bits))
}

fn orbit_rows(start: &[u8], m: usize, space: StateSpace) -> Result<Vec<Vec<u8>>> {
    let limit = orbit_limit(start.len());
    let mut rows = vec![start.to_vec()];
    loop {
        let mut next = rows.last().unwrap().clone();
        space.sweep(&mut next, m);
        if next == start {
            return Ok(rows);
        }
        if rows.len() >= limit {
            return Err(Error::OrbitOverflow { limit });
        }
        rows.push(next);
    }
}

/// A `φ`-orbit written row by row: row `i` is `φ^i(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitBoard {
    rows: Vec<BinaryWord>,
    m: usize,
}

impl OrbitBoard {
    pub fn rows(&self) -> &[BinaryWord] {
        &self.rows
    }

    /// Number of rows, the `φ`-orbit size.
    pub fn q(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `S(i, j)` with the row taken mod `q`; 0 for columns outside the
    /// board.
    pub fn get(&self, i: isize, j: isize) -> u8 {
        if j < 0 || j as usize >= self.width() {
            return 0;
        }
        let q = self.q() as isize;
        self.rows[i.rem_euclid(q) as usize].bit(j as usize)
    }

    pub fn column_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.width()];
        for row in &self.rows {
            for (j, s) in sums.iter_mut().enumerate() {
                *s += row.bit(j) as usize;
            }
        }
        sums
    }

    pub fn ones(&self) -> usize {
        self.rows.iter().map(BinaryWord::ones_count).sum()
    }
}

impl fmt::Display for OrbitBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

pub fn orbit_board(s: &ToggleWord) -> Result<OrbitBoard> {
    let rows = orbit_rows(s.bits(), s.m, StateSpace::Spread)?;
    Ok(OrbitBoard {
        rows: rows.into_iter().map(BinaryWord::from_valid).collect(),
        m: s.m,
    })
}

/// A chain of 1-cells from column 0 to the last column. Rows are stored
/// mod `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snake {
    pub cells: Vec<(usize, usize)>,
    pub composition: Composition,
}

impl Snake {
    pub fn start_row(&self) -> usize {
        self.cells[0].0
    }

    /// The tilde word, or `None` for a one-column board.
    pub fn tilde(&self, m: usize) -> Option<BinaryWord> {
        if self.composition.is_empty() {
            None
        } else {
            Some(snake_tilde(&self.composition, m).expect("snake parts are 1 or m+1"))
        }
    }
}

/// Replaces each part `1` with letter 1 and each part `m + 1` with letter 0.
pub fn snake_tilde(c: &Composition, m: usize) -> Result<BinaryWord> {
    let bits = c
        .parts()
        .iter()
        .map(|&part| match part {
            1 => Ok(1),
            p if p == m + 1 => Ok(0),
            p => Err(Error::InvalidSnakePart {
                part: p,
                expected: m + 1,
            }),
        })
        .collect::<Result<Vec<u8>>>()?;
    BinaryWord::from_bits(bits)
}

/// Extracts every snake, seeding from column-0 ones in increasing row
/// order. Errors when a 1-cell has both or neither forward (or backward)
/// neighbour, when a cell would be claimed twice, or when a 1-cell is left
/// outside every snake.
pub fn find_snakes(board: &OrbitBoard) -> Result<Vec<Snake>> {
    let q = board.q();
    let width = board.width();
    let step = (board.m + 1) as isize;
    let mut claimed = vec![vec![false; width]; q];
    let mut snakes = Vec::new();
    for r0 in (0..q).filter(|&r| board.rows[r].bit(0) == 1) {
        let (mut r, mut j) = (r0, 0usize);
        let mut cells = vec![(r, j)];
        let mut parts = Vec::new();
        claimed[r][j] = true;
        while j + 1 < width {
            let right = board.get(r as isize, j as isize + step) == 1;
            let down = board.get(r as isize + 1, j as isize + 1) == 1;
            match (right, down) {
                (true, false) => {
                    j += board.m + 1;
                    parts.push(board.m + 1);
                }
                (false, true) => {
                    r = (r + 1) % q;
                    j += 1;
                    parts.push(1);
                }
                (both, _) => {
                    return Err(Error::Board {
                        row: r,
                        col: j,
                        reason: if both {
                            "two forward successors"
                        } else {
                            "no forward successor"
                        },
                    })
                }
            }
            if claimed[r][j] {
                return Err(Error::Board {
                    row: r,
                    col: j,
                    reason: "cell claimed by two snakes",
                });
            }
            claimed[r][j] = true;
            cells.push((r, j));
        }
        snakes.push(Snake {
            cells,
            composition: Composition::new(parts),
        });
    }
    for (r, row) in board.rows.iter().enumerate() {
        for j in (0..width).filter(|&j| row.bit(j) == 1) {
            if !claimed[r][j] {
                return Err(Error::Board {
                    row: r,
                    col: j,
                    reason: "1-cell outside every snake",
                });
            }
            if j > 0 {
                let left = board.get(r as isize, j as isize - step) == 1;
                let up = board.get(r as isize - 1, j as isize - 1) == 1;
                if left == up {
                    return Err(Error::Board {
                        row: r,
                        col: j,
                        reason: if left {
                            "two backward predecessors"
                        } else {
                            "no backward predecessor"
                        },
                    });
                }
            }
        }
    }
    Ok(snakes)
}

/// Row advance from one snake's start to the next predicted by the leading
/// run `k` of the earlier snake's tilde word.
fn row_advance(tilde: &[u8], m: usize) -> usize {
    leading_ones(tilde).min(m) + 2
}

/// Checks that consecutive snakes (cyclically, by starting row) have
/// `ρ`-successive tilde words, that starting rows advance by
/// `min(k, m) + 2`, that the snake count equals the `ρ`-orbit size of the
/// tilde words, and that every tilde word lies in `Y_{L-1}`.
pub fn check_snake_rotation(s: &ToggleWord) -> Result<CheckReport> {
    let board = orbit_board(s)?;
    let snakes = find_snakes(&board)?;
    let m = s.m;
    let q = board.q();
    let mut report = CheckReport::new("snake", s.to_string(), m);
    if board.width() == 1 {
        report.push(Verdict::pass("one-column board", None));
        return Ok(report);
    }
    let tildes: Vec<BinaryWord> = snakes.iter().map(|sn| sn.tilde(m).unwrap()).collect();
    let p = snakes.len();
    for t in 0..p {
        let cur = &tildes[t];
        let next = &tildes[(t + 1) % p];
        let rotated = BinaryWord::from_valid(rotate_slice(cur.bits(), m));
        report.push(Verdict::compare(
            "rho(tilde_t) = tilde_t+1",
            Some(t),
            &rotated,
            next,
        ));
        let gap = (snakes[(t + 1) % p].start_row() + q - snakes[t].start_row()) % q;
        let gap = if gap == 0 { q } else { gap };
        report.push(Verdict::compare(
            "start-row advance = min(k,m)+2",
            Some(t),
            &gap,
            &row_advance(cur.bits(), m),
        ));
        let weight = cur.ones_count() + (m + 1) * cur.zeros_count();
        report.push(Verdict::compare(
            "tilde in Y_(L-1)",
            Some(t),
            &weight,
            &(board.width() - 1),
        ));
    }
    let base_orbit = orbit_relaxed(&tildes[0], m)?;
    report.push(Verdict::compare(
        "snake count = rho-orbit size",
        None,
        &p,
        &base_orbit.size(),
    ));
    Ok(report)
}

/// For every `S(i, L-1) = 1` counts the `d ∈ [m, 2m]` with
/// `S(i+2, L-1-d) = 1` and expects exactly one.
pub fn check_snaketail(s: &ToggleWord) -> Result<CheckReport> {
    let board = orbit_board(s)?;
    let m = s.m;
    let last = board.width() as isize - 1;
    let mut report = CheckReport::new("snaketail", s.to_string(), m);
    for i in 0..board.q() {
        if board.get(i as isize, last) == 0 {
            continue;
        }
        let hits: Vec<usize> = (m..=2 * m)
            .filter(|&d| board.get(i as isize + 2, last - d as isize) == 1)
            .collect();
        if hits.len() == 1 {
            report.push(Verdict::pass("unique tail offset", Some(i)));
        } else {
            report.push(Verdict::fail(
                "unique tail offset",
                Some(i),
                format!("row {i}: offsets {hits:?}"),
            ));
        }
    }
    Ok(report)
}

fn mirror_report(check: &'static str, subject: String, m: usize, sums: &[usize]) -> CheckReport {
    let n = sums.len();
    let mut report = CheckReport::new(check, subject, m);
    for i in 0..n {
        report.push(Verdict::compare(
            "column mirror",
            Some(i),
            &sums[i],
            &sums[n - 1 - i],
        ));
    }
    report
}

/// `Σ_t φ^t(S)_i = Σ_t φ^t(S)_{N-1-i}` for every `i`.
pub fn check_phi_symmetry(s: &ToggleWord) -> Result<CheckReport> {
    let board = orbit_board(s)?;
    Ok(mirror_report(
        "phi-symmetry",
        s.to_string(),
        s.m,
        &board.column_sums(),
    ))
}

/// The `Z_N` analogue of [`check_phi_symmetry`]; a conjecture, not a
/// theorem, hence the report name.
pub fn check_z_symmetry(z: &BinaryWord, m: usize) -> Result<CheckReport> {
    check_z(z, m)?;
    let rows = orbit_rows(z.bits(), m, StateSpace::Bounded)?;
    let mut sums = vec![0; z.len()];
    for row in &rows {
        for (j, s) in sums.iter_mut().enumerate() {
            *s += row[j] as usize;
        }
    }
    Ok(mirror_report(
        "z-symmetry (experimental)",
        z.to_string(),
        m,
        &sums,
    ))
}

/// Column sums of the board of `S` rebuilt from the frequency table of its
/// snake tilde words: column `i` collects `ν_{L^(j)}(j - (i-j)/m)` over the
/// `j` with `i - j` a non-negative multiple of `m`.
pub fn column_sums_via_frequency(s: &ToggleWord) -> Result<Vec<usize>> {
    let board = orbit_board(s)?;
    let snakes = find_snakes(&board)?;
    let m = s.m;
    let Some(base) = snakes.first().and_then(|sn| sn.tilde(m)) else {
        return Ok(board.column_sums());
    };
    let table = FrequencyTable::from_orbit(&orbit_relaxed(&base, m)?);
    let sums = (0..board.width())
        .map(|i| {
            (0..=i.min(base.len()))
                .filter(|&j| (i - j) % m == 0)
                .filter_map(|j| j.checked_sub((i - j) / m).map(|s| table.get(s, j)))
                .sum()
        })
        .collect();
    Ok(sums)
}

/// The tilde word of the snake starting at the first row with a 1 in
/// column 0, traced lazily without building the board.
fn first_tilde_lazy(s: &ToggleWord) -> Result<Option<Vec<u8>>> {
    let m = s.m;
    let width = s.len();
    let limit = orbit_limit(width);
    let mut row = s.bits().to_vec();
    let mut steps = 0;
    while row[0] == 0 {
        StateSpace::Spread.sweep(&mut row, m);
        steps += 1;
        if row == s.bits() || steps > limit {
            return Ok(None);
        }
    }
    let mut tilde = Vec::new();
    let mut j = 0;
    while j + 1 < width {
        if j + m + 1 < width && row[j + m + 1] == 1 {
            j += m + 1;
            tilde.push(0);
        } else {
            StateSpace::Spread.sweep(&mut row, m);
            steps += 1;
            if row[j + 1] != 1 {
                return Err(Error::Board {
                    row: steps,
                    col: j,
                    reason: "no forward successor",
                });
            }
            j += 1;
            tilde.push(1);
        }
    }
    Ok(Some(tilde))
}

/// `φ`-orbit size from one snake: `Σ_t (min(k_t, m) + 2)` over the
/// `ρ`-orbit of its tilde word, `k_t` being the leading-ones run of
/// `ρ^t(tilde)`. Falls back to direct iteration for one-column boards.
pub fn phi_orbit_size_fast(s: &ToggleWord) -> Result<usize> {
    match first_tilde_lazy(s)? {
        Some(tilde) if !tilde.is_empty() => {
            let base = BinaryWord::from_valid(tilde);
            let orbit = orbit_relaxed(&base, s.m)?;
            Ok(orbit
                .words()
                .iter()
                .map(|w| row_advance(w.bits(), s.m))
                .sum())
        }
        _ => Ok(orbit_rows(s.bits(), s.m, StateSpace::Spread)?.len()),
    }
}

/// Tilde word of the first snake (by starting row) of the board of `S`.
pub fn first_snake_tilde(s: &ToggleWord) -> Result<Option<BinaryWord>> {
    Ok(first_tilde_lazy(s)?
        .filter(|t| !t.is_empty())
        .map(BinaryWord::from_valid))
}

/// One `φ`-orbit of `X_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToggleOrbit {
    /// Lexicographically smallest member.
    pub representative: ToggleWord,
    /// Tilde word of the first snake of the representative's board.
    pub tilde_base: Option<BinaryWord>,
    /// `(rw, bqw)` of `tilde_base`, when it is at least `m` long.
    pub encoding: Option<EncodedPair>,
    pub period: usize,
    pub snakes: usize,
}

pub fn decompose_x(n: usize, m: usize) -> Result<Vec<ToggleOrbit>> {
    decompose_x_with(n, m, Execution::auto())
}

/// Orbit discovery is sequential; boards and snakes of the discovered
/// orbits are analysed according to `exec`.
pub fn decompose_x_with(n: usize, m: usize, exec: Execution) -> Result<Vec<ToggleOrbit>> {
    let words = enumerate_x(n, m)?;
    let mut seen: HashSet<Vec<u8>> = HashSet::with_capacity(words.len());
    let mut reps = Vec::new();
    for w in &words {
        if seen.contains(w.bits()) {
            continue;
        }
        for row in orbit_rows(w.bits(), m, StateSpace::Spread)? {
            seen.insert(row);
        }
        reps.push(w.clone());
    }
    map_slice(exec, &reps, |rep| {
        let board = orbit_board(rep)?;
        let snakes = find_snakes(&board)?;
        let tilde_base = snakes.first().and_then(|s| s.tilde(m));
        let encoding = match &tilde_base {
            Some(t) if t.len() >= m => Some(encode(t, m)?),
            _ => None,
        };
        Ok(ToggleOrbit {
            representative: rep.clone(),
            tilde_base,
            encoding,
            period: board.q(),
            snakes: snakes.len(),
        })
    })
    .into_iter()
    .collect()
}

/// `φ`-orbits of `Z_N` named by their smallest member.
pub fn decompose_z(n: usize, m: usize) -> Result<Vec<OrbitSummary>> {
    let words = enumerate_z(n, m)?;
    let mut seen: HashSet<Vec<u8>> = HashSet::with_capacity(words.len());
    let mut out = Vec::new();
    for z in words {
        if seen.contains(z.bits()) {
            continue;
        }
        let rows = orbit_rows(z.bits(), m, StateSpace::Bounded)?;
        let size = rows.len();
        seen.extend(rows);
        out.push(OrbitSummary {
            representative: z,
            size,
        });
    }
    Ok(out)
}

/// `Y_n`: non-empty words with `a(w) + (m+1) b(w) = n`.
pub fn enumerate_y(n: usize, m: usize) -> Result<Vec<BinaryWord>> {
    if m == 0 {
        return Err(Error::MOutOfRange { m, n });
    }
    check_enum_size(n)?;
    let mut out = Vec::new();
    for zeros in 0..=n / (m + 1) {
        let len = n - m * zeros;
        if len == 0 {
            continue;
        }
        for idx in 0..(1u64 << len) {
            if idx.count_zeros() as usize - (64 - len) == zeros {
                out.push(BinaryWord::from_index(idx, len));
            }
        }
    }
    out.sort();
    Ok(out)
}

fn canonical_rho(w: &BinaryWord, m: usize) -> Result<BinaryWord> {
    Ok(orbit_relaxed(w, m)?
        .words()
        .iter()
        .min()
        .cloned()
        .expect("orbits are non-empty"))
}

/// Checks that the first-snake tilde words of the `φ`-orbits of `X_L` pick
/// out each `ρ`-orbit of `Y_{L-1}` exactly once.
pub fn check_orbit_bijection(l: usize, m: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("orbit-bijection", format!("X_{l}"), m);
    if l < 2 {
        report.push(Verdict::pass("one-column board", None));
        return Ok(report);
    }
    let orbits = decompose_x_with(l, m, Execution::Sequential)?;
    let mut hits: BTreeMap<BinaryWord, usize> = BTreeMap::new();
    for o in &orbits {
        let base = o.tilde_base.as_ref().expect("boards wider than one column");
        *hits.entry(canonical_rho(base, m)?).or_default() += 1;
    }
    let mut targets = BTreeSet::new();
    for y in enumerate_y(l - 1, m)? {
        targets.insert(canonical_rho(&y, m)?);
    }
    let doubles: Vec<String> = hits
        .iter()
        .filter(|(_, &c)| c > 1)
        .map(|(w, _)| w.to_string())
        .collect();
    if doubles.is_empty() {
        report.push(Verdict::pass("injective", None));
    } else {
        report.push(Verdict::fail("injective", None, doubles.join(",")));
    }
    let hit_set: BTreeSet<BinaryWord> = hits.into_keys().collect();
    report.push(Verdict::compare("surjective", None, &hit_set, &targets));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tw(s: &str, m: usize) -> ToggleWord {
        ToggleWord::parse(s, m).unwrap()
    }

    #[test]
    fn membership() {
        assert!(ToggleWord::parse("1000100", 3).is_ok());
        assert_eq!(
            ToggleWord::parse("1100000", 3),
            Err(Error::NotSpread {
                first: 0,
                second: 1,
                m: 3
            })
        );
        assert!(ToggleWord::parse("1001000", 3).is_err());
        assert!(ToggleWord::parse("100", 4).is_err());
        assert!(is_in_z(&BinaryWord::parse("0110").unwrap(), 2));
        assert!(!is_in_z(&BinaryWord::parse("0111").unwrap(), 2));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_x(14, 3).unwrap().len(), 131);
        assert_eq!(enumerate_x(7, 3).unwrap().len(), 14);
        for m in 1..6 {
            assert_eq!(enumerate_x(m, m).unwrap().len(), m + 1);
        }
        let x = enumerate_x(9, 2).unwrap();
        assert!(x.windows(2).all(|p| p[0] < p[1]));
        for n in 1..=10 {
            let xs: Vec<BinaryWord> = enumerate_x(n, 1)
                .unwrap()
                .into_iter()
                .map(|w| w.word)
                .collect();
            assert_eq!(xs, enumerate_z(n, 1).unwrap());
        }
        assert!(enumerate_x(2, 3).is_err());
    }

    #[test]
    fn toggles() {
        let z = tw("0000000", 3);
        assert_eq!(toggle_at(&z, 0).unwrap(), tw("1000000", 3));
        let one = tw("1000000", 3);
        assert_eq!(toggle_at(&one, 1).unwrap(), one);
        assert_eq!(toggle_at(&one, 4).unwrap(), tw("1000100", 3));
        assert!(toggle_at(&one, 7).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&tw("0000000", 3)), tw("1000100", 3));
        assert_eq!(orbit_board(&tw("1000000", 3)).unwrap().q(), 3);
        let sizes: Vec<usize> = decompose_x(7, 3)
            .unwrap()
            .iter()
            .map(|o| o.period)
            .collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![3, 5, 6]);
    }

    #[test]
    fn example_board_snakes() {
        let s = tw("10000000001000", 3);
        let board = orbit_board(&s).unwrap();
        let snakes = find_snakes(&board).unwrap();
        assert_eq!(snakes.len(), 9);
        assert!(snakes.iter().all(|sn| sn.composition.total() == 13));
        assert!(check_snake_rotation(&s).unwrap().passed());
        let sums = board.column_sums();
        assert_eq!(&sums[..7], &[9, 7, 3, 3, 4, 6, 4]);
        assert_eq!(column_sums_via_frequency(&s).unwrap(), sums);
    }

    #[test]
    fn single_snake_board() {
        let s = tw("1000000", 3);
        let snakes = find_snakes(&orbit_board(&s).unwrap()).unwrap();
        assert_eq!(snakes.len(), 1);
        assert_eq!(snakes[0].tilde(3).unwrap().to_string(), "101");
        assert!(check_snake_rotation(&s).unwrap().passed());
    }

    #[test]
    fn tilde_examples() {
        let c = Composition::new(vec![1, 4, 1, 1, 1, 1, 4]);
        assert_eq!(snake_tilde(&c, 3).unwrap().to_string(), "1011110");
        assert_eq!(
            snake_tilde(&Composition::new(vec![4, 4]), 3)
                .unwrap()
                .to_string(),
            "00"
        );
        assert_eq!(
            snake_tilde(&Composition::new(vec![1; 5]), 3)
                .unwrap()
                .to_string(),
            "11111"
        );
        assert!(snake_tilde(&Composition::new(vec![2]), 3).is_err());
    }

    #[test]
    fn fast_orbit_size_examples() {
        let s = tw("10000010000001", 3);
        assert_eq!(
            first_snake_tilde(&s).unwrap().unwrap().to_string(),
            "1111010"
        );
        assert_eq!(phi_orbit_size_fast(&s).unwrap(), 31);
        assert_eq!(phi_orbit_size_fast(&tw("10000100001000", 3)).unwrap(), 5);
        assert_eq!(phi_orbit_size_fast(&tw("0", 1)).unwrap(), 2);
    }

    #[test]
    fn table_of_orbits_in_x14() {
        let orbits = decompose_x(14, 3).unwrap();
        let mut periods: Vec<usize> = orbits.iter().map(|o| o.period).collect();
        periods.sort();
        assert_eq!(periods, vec![5, 9, 11, 17, 27, 31, 31]);
        assert_eq!(periods.iter().sum::<usize>(), 131);
    }

    #[test]
    fn y_sets() {
        let y6: Vec<String> = enumerate_y(6, 3)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(y6, vec!["011", "101", "110", "111111"]);
        assert!(check_orbit_bijection(7, 3).unwrap().passed());
    }

    #[test]
    fn z_symmetry_small() {
        for z in enumerate_z(8, 2).unwrap() {
            assert!(check_z_symmetry(&z, 2).unwrap().passed());
        }
        assert!(phi_z(&BinaryWord::parse("0111").unwrap(), 2).is_err());
        let census = decompose_z(9, 2).unwrap();
        assert_eq!(census.iter().map(|o| o.size).sum::<usize>(), 274);
    }
}
