//! Cumulative-sum statistics over `ρ`-orbits.
//!
//! For an orbit `w, ρ(w), ..., ρ^{p-1}(w)` the multiset `L^(j)` collects the
//! sums of the first `j` letters of every orbit word and `R^(j)` the sums of
//! the last `j` letters. The two always agree; the checks in this module
//! evaluate that claim together with the multiset identities `M_{a,b}^(j)`
//! built from the extension trace.

use std::collections::BTreeMap;
use std::fmt;

use crate::bitword::BinaryWord;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Verdict};
use crate::rotation::{
    check_m, extension_trace, index_decomposition, orbit, ExtensionTrace, IndexClass,
    IndexDecomposition, Orbit,
};

/// A multiset of non-negative integers stored as value → multiplicity.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntMultiset {
    counts: BTreeMap<usize, usize>,
}

impl IntMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, value: usize) {
        self.insert_n(value, 1);
    }

    pub fn insert_n(&mut self, value: usize, count: usize) {
        if count > 0 {
            *self.counts.entry(value).or_insert(0) += count;
        }
    }

    /// Multiplicity `ν(value)`.
    pub fn count(&self, value: usize) -> usize {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `(value, multiplicity)` pairs in increasing value order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    /// All elements with repetition, sorted.
    pub fn to_sorted_vec(&self) -> Vec<usize> {
        self.iter()
            .flat_map(|(v, c)| std::iter::repeat_n(v, c))
            .collect()
    }

    /// Multiset union, adding multiplicities.
    pub fn union(&self, other: &IntMultiset) -> IntMultiset {
        let mut out = self.clone();
        for (v, c) in other.iter() {
            out.insert_n(v, c);
        }
        out
    }

    /// `M - 1 = {x - 1 | x ∈ M}`. A zero element has no image and is
    /// reported as an error.
    pub fn minus_one(&self) -> Result<IntMultiset> {
        if self.count(0) > 0 {
            return Err(Error::NegativeShift(0));
        }
        Ok(IntMultiset {
            counts: self.counts.iter().map(|(&v, &c)| (v - 1, c)).collect(),
        })
    }

    pub fn plus(&self, k: usize) -> IntMultiset {
        IntMultiset {
            counts: self.counts.iter().map(|(&v, &c)| (v + k, c)).collect(),
        }
    }
}

impl FromIterator<usize> for IntMultiset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut m = IntMultiset::new();
        for v in iter {
            m.insert(v);
        }
        m
    }
}

impl fmt::Display for IntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.to_sorted_vec().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_j(j: usize, lo: usize, hi: usize) -> Result<()> {
    if j < lo || j > hi {
        return Err(Error::JOutOfRange { j, lo, hi });
    }
    Ok(())
}

/// `L^(j)` of an already computed orbit.
pub fn left_multiset_of(orbit: &Orbit, j: usize) -> IntMultiset {
    orbit.words().iter().map(|w| w.prefix_sum(j)).collect()
}

/// `R^(j)` of an already computed orbit.
pub fn right_multiset_of(orbit: &Orbit, j: usize) -> IntMultiset {
    orbit.words().iter().map(|w| w.suffix_sum(j)).collect()
}

pub fn left_multiset(w: &BinaryWord, m: usize, j: usize) -> Result<IntMultiset> {
    check_j(j, 0, w.len())?;
    Ok(left_multiset_of(&orbit(w, m)?, j))
}

pub fn right_multiset(w: &BinaryWord, m: usize, j: usize) -> Result<IntMultiset> {
    check_j(j, 0, w.len())?;
    Ok(right_multiset_of(&orbit(w, m)?, j))
}

/// Table of `ν_{L^(j)}(s)` for `s ∈ 0..=a(w)` (rows) and `j ∈ 0..=n`
/// (columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencyTable {
    ones: usize,
    n: usize,
    /// `entries[s][j]`
    entries: Vec<Vec<usize>>,
}

impl FrequencyTable {
    fn build(orbit: &Orbit, right: bool) -> Self {
        let first = &orbit.words()[0];
        let n = first.len();
        let ones = first.ones_count();
        let mut entries = vec![vec![0usize; n + 1]; ones + 1];
        for w in orbit.words() {
            let mut sum = 0;
            entries[0][0] += 1;
            #[allow(clippy::needless_range_loop)]
            for j in 1..=n {
                let i = if right { n - j } else { j - 1 };
                sum += w.bit(i) as usize;
                entries[sum][j] += 1;
            }
        }
        FrequencyTable { ones, n, entries }
    }

    pub fn from_orbit(orbit: &Orbit) -> Self {
        Self::build(orbit, false)
    }

    /// The same table built from right cumulative sums `ν_{R^(j)}(s)`.
    pub fn from_orbit_right(orbit: &Orbit) -> Self {
        Self::build(orbit, true)
    }

    pub fn ones(&self) -> usize {
        self.ones
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `ν_{L^(j)}(s)`; zero outside the table.
    pub fn get(&self, s: usize, j: usize) -> usize {
        self.entries
            .get(s)
            .and_then(|row| row.get(j))
            .copied()
            .unwrap_or(0)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<usize> {
        self.entries.iter().map(|row| row[j]).collect()
    }
}

pub fn frequency_table(w: &BinaryWord, m: usize) -> Result<FrequencyTable> {
    Ok(FrequencyTable::from_orbit(&orbit(w, m)?))
}

pub fn frequency_table_right(w: &BinaryWord, m: usize) -> Result<FrequencyTable> {
    Ok(FrequencyTable::from_orbit_right(&orbit(w, m)?))
}

fn class_index(c: IndexClass) -> usize {
    match c {
        IndexClass::Zero => 0,
        IndexClass::Tail => 1,
        IndexClass::Head => 2,
    }
}

/// Sum of `len` consecutive letters of `w̄` (forward from `start`) or of `ŵ`
/// (backward from `start`), indices modulo `l`.
fn window_sum(t: &ExtensionTrace, start: usize, len: usize, hatted: bool) -> usize {
    let s = start as isize;
    (0..len as isize)
        .map(|i| {
            if hatted {
                t.hat_at(s - i) as usize
            } else {
                t.bar_at(s + i) as usize
            }
        })
        .sum()
}

/// `M_{a,b}^(j)`, or `M̂_{a,b}^(j)` when `hatted`.
///
/// Unhatted: sums `w̄_k + ... + w̄_{k+j-1}` over `k ∈ I_a` with
/// `k + j - 1 ∈ I_b`. Hatted: sums `ŵ_k + ŵ_{k-1} + ... + ŵ_{k-j+1}` over
/// `k ∈ Î_a` with `k - j + 1 ∈ Î_b`.
pub fn m_ab(
    trace: &ExtensionTrace,
    decomp: &IndexDecomposition,
    j: usize,
    a: IndexClass,
    b: IndexClass,
    hatted: bool,
) -> Result<IntMultiset> {
    check_j(j, 1, trace.n)?;
    let offset = if hatted {
        1 - j as isize
    } else {
        j as isize - 1
    };
    let (set, class_of): (_, &dyn Fn(usize) -> IndexClass) = if hatted {
        (decomp.hat_set(a), &|i| decomp.hat_class(i))
    } else {
        (decomp.bar_set(a), &|i| decomp.bar_class(i))
    };
    Ok(set
        .iter()
        .filter(|&&k| class_of(trace.wrap(k as isize + offset)) == b)
        .map(|&k| window_sum(trace, k, j, hatted))
        .collect())
}

/// All nine `M_{a,b}^(j)` at once, indexed `[a][b]` in the order `0, T, H`.
pub fn m_table(
    trace: &ExtensionTrace,
    decomp: &IndexDecomposition,
    j: usize,
    hatted: bool,
) -> Result<[[IntMultiset; 3]; 3]> {
    check_j(j, 1, trace.n)?;
    let mut table: [[IntMultiset; 3]; 3] = Default::default();
    let l = trace.l();
    for k in 0..l {
        let (a, b) = if hatted {
            (
                decomp.hat_class(k),
                decomp.hat_class(trace.wrap(k as isize + 1 - j as isize)),
            )
        } else {
            (
                decomp.bar_class(k),
                decomp.bar_class(trace.wrap(k as isize + j as isize - 1)),
            )
        };
        table[class_index(a)][class_index(b)].insert(window_sum(trace, k, j, hatted));
    }
    Ok(table)
}

/// `(∪_b M_{0,b}) ∪ (∪_b M_{T,b} - 1)`, which reassembles `L^(j-1)` from
/// the table at `j` (or `R^(j-1)` from the hatted table).
pub fn reassemble(table: &[[IntMultiset; 3]; 3]) -> Result<IntMultiset> {
    let mut out = IntMultiset::new();
    for (zero, tail) in table[0].iter().zip(&table[1]) {
        out = out.union(zero);
        out = out.union(&tail.minus_one()?);
    }
    Ok(out)
}

/// Verdicts of `L^(j) = R^(j)` for `j = 0..=n`.
pub fn check_theorem1(w: &BinaryWord, m: usize) -> Result<CheckReport> {
    let o = orbit(w, m)?;
    Ok(theorem1_on_orbit(&o, m))
}

pub(crate) fn theorem1_on_orbit(o: &Orbit, m: usize) -> CheckReport {
    let left = FrequencyTable::from_orbit(o);
    let right = FrequencyTable::from_orbit_right(o);
    let w = &o.words()[0];
    let mut report = CheckReport::new("theorem1", w.to_string(), m);
    for j in 0..=w.len() {
        report.push(Verdict::compare(
            "L=R",
            Some(j),
            &left.column(j),
            &right.column(j),
        ));
    }
    report
}

/// Verdicts of `Σ_k ρ^k(w)_j = Σ_k ρ^k(w)_{n-1-j}` for every column `j`.
pub fn check_corollary_column_sums(w: &BinaryWord, m: usize) -> Result<CheckReport> {
    let o = orbit(w, m)?;
    let sums = column_sums(&o);
    let n = w.len();
    let mut report = CheckReport::new("column-sums", w.to_string(), m);
    for j in 0..n {
        report.push(Verdict::compare(
            "column mirror",
            Some(j),
            &sums[j],
            &sums[n - 1 - j],
        ));
    }
    Ok(report)
}

/// `Σ_k ρ^k(w)_j` for every column `j`.
pub fn column_sums(o: &Orbit) -> Vec<usize> {
    let n = o.words()[0].len();
    let mut sums = vec![0; n];
    for w in o.words() {
        for (j, s) in sums.iter_mut().enumerate() {
            *s += w.bit(j) as usize;
        }
    }
    sums
}

fn shifted(m: &IntMultiset) -> Result<IntMultiset> {
    m.minus_one()
}

/// Evaluates the `M_{a,b}` identities for every `j` in `1..=n`:
///
/// * all nine cells agree with their hatted counterparts;
/// * the closed form at `j = 1`;
/// * `M_{0,0}` and `M_{T,T}` agree;
/// * the four-term union `M_{0,0} ∪ M_{0,T} ∪ (M_{T,0}-1) ∪ (M_{T,T}-1)`;
/// * the row and column sums `M_{a,0} ∪ (M_{a,T}-1) ∪ (M_{a,H}-1)` and
///   `M_{0,b} ∪ (M_{T,b}-1) ∪ (M_{H,b}-1)`;
/// * `M_{0,T} ∪ (M_{T,T}-1)`;
/// * `L^(j-1)` and `R^(j-1)` reassembled from the tables;
/// * `L^(j)` and `R^(j)` read off `w̄` and `ŵ` at the cut points.
pub fn check_lemma_identities(w: &BinaryWord, m: usize) -> Result<CheckReport> {
    check_m(w, m)?;
    let n = w.len();
    let o = orbit(w, m)?;
    let trace = extension_trace(w, m)?;
    let decomp = index_decomposition(&trace);
    let mut report = CheckReport::new("lemmas", w.to_string(), m);
    let labels = IndexClass::ALL;
    let (z, t, h) = (0, 1, 2);

    for j in 1..=n {
        let bar = m_table(&trace, &decomp, j, false)?;
        let hat = m_table(&trace, &decomp, j, true)?;
        let jj = Some(j);

        for a in 0..3 {
            for b in 0..3 {
                report.push(Verdict::compare(
                    format!(
                        "M[{},{}]=M^[{},{}]",
                        labels[a].label(),
                        labels[b].label(),
                        labels[a].label(),
                        labels[b].label()
                    ),
                    jj,
                    &bar[a][b],
                    &hat[a][b],
                ));
            }
        }

        if j == 1 {
            for (name, table) in [("M(1) closed form", &bar), ("M^(1) closed form", &hat)] {
                let sizes = [decomp.i0.len(), decomp.it.len(), decomp.ih.len()];
                let mut ok = true;
                for a in 0..3 {
                    #[allow(clippy::needless_range_loop)]
                    for b in 0..3 {
                        let expect: IntMultiset = if a != b {
                            IntMultiset::new()
                        } else {
                            let mut e = IntMultiset::new();
                            e.insert_n(usize::from(a != z), sizes[a]);
                            e
                        };
                        ok &= table[a][b] == expect;
                    }
                }
                report.push(if ok {
                    Verdict::pass(name, jj)
                } else {
                    Verdict::fail(name, jj, format!("{table:?}"))
                });
            }
        }

        report.push(Verdict::compare("M00", jj, &bar[z][z], &hat[z][z]));
        report.push(Verdict::compare("MTT", jj, &bar[t][t], &hat[t][t]));

        let four = |tb: &[[IntMultiset; 3]; 3]| -> Result<IntMultiset> {
            Ok(tb[z][z]
                .union(&tb[z][t])
                .union(&shifted(&tb[t][z])?)
                .union(&shifted(&tb[t][t])?))
        };
        report.push(Verdict::compare(
            "four-term union",
            jj,
            &four(&bar)?,
            &four(&hat)?,
        ));

        if j > 1 {
            for a in 0..3 {
                let row = |tb: &[[IntMultiset; 3]; 3]| -> Result<IntMultiset> {
                    Ok(tb[a][z]
                        .union(&shifted(&tb[a][t])?)
                        .union(&shifted(&tb[a][h])?))
                };
                report.push(Verdict::compare(
                    format!("row sum {}", labels[a].label()),
                    jj,
                    &row(&bar)?,
                    &row(&hat)?,
                ));
            }
            for b in 0..3 {
                let col = |tb: &[[IntMultiset; 3]; 3]| -> Result<IntMultiset> {
                    Ok(tb[z][b]
                        .union(&shifted(&tb[t][b])?)
                        .union(&shifted(&tb[h][b])?))
                };
                report.push(Verdict::compare(
                    format!("column sum {}", labels[b].label()),
                    jj,
                    &col(&bar)?,
                    &col(&hat)?,
                ));
            }
        }

        let zt = |tb: &[[IntMultiset; 3]; 3]| -> Result<IntMultiset> {
            Ok(tb[z][t].union(&shifted(&tb[t][t])?))
        };
        report.push(Verdict::compare(
            "M0T u (MTT-1)",
            jj,
            &zt(&bar)?,
            &zt(&hat)?,
        ));

        report.push(Verdict::compare(
            "L reassembly",
            Some(j - 1),
            &reassemble(&bar)?,
            &left_multiset_of(&o, j - 1),
        ));
        report.push(Verdict::compare(
            "R reassembly",
            Some(j - 1),
            &reassemble(&hat)?,
            &right_multiset_of(&o, j - 1),
        ));

        let l_bar: IntMultiset = decomp
            .i0
            .union(&decomp.it)
            .map(|&k| window_sum(&trace, trace.wrap(k as isize + 1), j, false))
            .collect();
        report.push(Verdict::compare(
            "L via bar",
            jj,
            &l_bar,
            &left_multiset_of(&o, j),
        ));
        let r_hat: IntMultiset = decomp
            .hat_i0
            .union(&decomp.hat_it)
            .map(|&k| window_sum(&trace, trace.wrap(k as isize - 1), j, true))
            .collect();
        report.push(Verdict::compare(
            "R via hat",
            jj,
            &r_hat,
            &right_multiset_of(&o, j),
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitword::BinaryWord;
    use IndexClass::{Head as H, Tail as T, Zero as Z};

    fn w(s: &str) -> BinaryWord {
        BinaryWord::parse(s).unwrap()
    }

    fn ms(v: &[usize]) -> IntMultiset {
        v.iter().copied().collect()
    }

    #[test]
    fn multiset_basics() {
        let a = ms(&[1, 1, 2]);
        assert_eq!(a.count(1), 2);
        assert_eq!(a.len(), 3);
        assert_eq!(a.union(&ms(&[2])), ms(&[1, 1, 2, 2]));
        assert_eq!(a.minus_one().unwrap(), ms(&[0, 0, 1]));
        assert_eq!(ms(&[0, 3]).minus_one(), Err(Error::NegativeShift(0)));
        assert_eq!(a.to_string(), "{1,1,2}");
        assert_eq!(IntMultiset::new().to_string(), "{}");
        assert_eq!(a.plus(2), ms(&[3, 3, 4]));
    }

    #[test]
    fn left_right_examples() {
        let x = w("1011110");
        assert_eq!(
            left_multiset(&x, 3, 2).unwrap(),
            ms(&[1, 1, 1, 1, 1, 1, 2, 2, 2])
        );
        assert_eq!(
            right_multiset(&x, 3, 2).unwrap(),
            ms(&[1, 1, 1, 1, 1, 1, 2, 2, 2])
        );
        assert_eq!(left_multiset(&x, 3, 0).unwrap(), ms(&[0; 9]));
        assert_eq!(right_multiset(&x, 3, 0).unwrap(), ms(&[0; 9]));
        assert_eq!(left_multiset(&x, 3, 7).unwrap(), ms(&[5; 9]));
        assert_eq!(right_multiset(&x, 3, 7).unwrap(), ms(&[5; 9]));
        assert_eq!(
            left_multiset(&x, 3, 8),
            Err(Error::JOutOfRange { j: 8, lo: 0, hi: 7 })
        );
    }

    #[test]
    fn frequency_table_example() {
        let f = frequency_table(&w("1011110"), 3).unwrap();
        let expect: Vec<Vec<usize>> = vec![
            vec![9, 2, 0, 0, 0, 0, 0, 0],
            vec![0, 7, 6, 2, 0, 0, 0, 0],
            vec![0, 0, 3, 4, 3, 0, 0, 0],
            vec![0, 0, 0, 3, 4, 3, 0, 0],
            vec![0, 0, 0, 0, 2, 6, 7, 0],
            vec![0, 0, 0, 0, 0, 0, 2, 9],
        ];
        assert_eq!(f.rows(), expect.as_slice());
        assert_eq!(frequency_table_right(&w("1011110"), 3).unwrap(), f);
    }

    #[test]
    fn frequency_table_all_ones() {
        let f = frequency_table(&w("1111111"), 3).unwrap();
        for j in 0..=7 {
            for s in 0..=7 {
                assert_eq!(f.get(s, j), usize::from(s == j));
            }
        }
    }

    #[test]
    fn m_ab_examples() {
        let trace = extension_trace(&w("1011110"), 3).unwrap();
        let d = index_decomposition(&trace);
        let m = |a, b| m_ab(&trace, &d, 3, a, b, false).unwrap();
        assert_eq!(m(Z, Z), ms(&[1, 1]));
        assert_eq!(m(Z, T), ms(&[]));
        assert_eq!(m(Z, H), ms(&[1, 2, 2, 2]));
        assert_eq!(m(T, Z), ms(&[2, 2]));
        assert_eq!(m(T, T), ms(&[]));
        assert_eq!(m(T, H), ms(&[2]));
        assert_eq!(m(H, Z), ms(&[1, 2]));
        assert_eq!(m(H, T), ms(&[3, 3, 3]));
        assert_eq!(m(H, H), ms(&[2, 2, 2, 3, 3]));

        let table = m_table(&trace, &d, 3, false).unwrap();
        for (ai, a) in IndexClass::ALL.into_iter().enumerate() {
            for (bi, b) in IndexClass::ALL.into_iter().enumerate() {
                assert_eq!(table[ai][bi], m(a, b));
                let hat = m_ab(&trace, &d, 3, a, b, true).unwrap();
                assert_eq!(m_table(&trace, &d, 3, true).unwrap()[ai][bi], hat);
            }
        }
        assert_eq!(
            reassemble(&table).unwrap(),
            ms(&[1, 1, 1, 1, 1, 1, 2, 2, 2])
        );
        assert!(m_ab(&trace, &d, 0, Z, Z, false).is_err());
        assert!(m_ab(&trace, &d, 8, Z, Z, false).is_err());
    }

    #[test]
    fn checks_pass_on_example() {
        let x = w("1011110");
        assert!(check_theorem1(&x, 3).unwrap().passed());
        let c = check_corollary_column_sums(&x, 3).unwrap();
        assert!(c.passed());
        let o = orbit(&x, 3).unwrap();
        let sums = column_sums(&o);
        assert_eq!(sums[0], 7);
        assert_eq!(sums[6], 7);
        let r = check_lemma_identities(&x, 3).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn reflection_and_midpoint_symmetry() {
        for n in 1..=10 {
            for m in 1..=n.min(4) {
                for idx in 0..(1u64 << n) {
                    let x = BinaryWord::from_index(idx, n);
                    let f = frequency_table(&x, m).unwrap();
                    let a = x.ones_count();
                    let p = orbit(&x, m).unwrap().size();
                    for j in 0..=n {
                        assert_eq!(f.column(j).iter().sum::<usize>(), p);
                        for s in 0..=a {
                            assert_eq!(f.get(s, j), f.get(a - s, n - j));
                        }
                    }
                    if n % 2 == 0 {
                        for s in 0..=a {
                            assert_eq!(f.get(s, n / 2), f.get(a - s, n / 2));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lemma_identities_exhaustive_small() {
        for n in 1..=8 {
            for m in 1..=n.min(3) {
                for idx in 0..(1u64 << n) {
                    let x = BinaryWord::from_index(idx, n);
                    let r = check_lemma_identities(&x, m).unwrap();
                    assert!(r.passed(), "{r}");
                }
            }
        }
    }
}
