//! The remainder/quotient encoding `π: w ↦ (rw, bqw)`.
//!
//! Writing the one-run encoding of `w` as `a_i = r_i + m q_i` with
//! `0 <= r_i < m` splits it into a remainder word `r_0 ... r_k` and a
//! quotient word `q_0 ... q_k`; the binary quotient word is the binary word
//! whose one-run encoding is the quotient word. Under `π`, `ρ` becomes the
//! map `θ` that always rotates `bqw` by one and rotates `rw` by one only
//! when `bqw` starts with a zero. The `ρ`-orbit size of `w` is therefore the
//! product of the necklace periods of `rw` and `bqw`.

use std::fmt;

use crate::bitword::{from_one_run_encoding, necklace_period, BinaryWord, Composition};
use crate::error::{Error, Result};
use crate::par::{map_range, map_slice, Execution};
use crate::report::{CheckReport, Verdict};
use crate::rotation::{check_m, rotate, RotationParams};

/// Default largest `n` accepted by [`decompose_space`].
pub const DEFAULT_SPACE_CAP: usize = 24;

/// A pair `(rw, bqw)` in `P_k`, where `k + 1 = |rw|` is one more than the
/// number of zeros of `bqw`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EncodedPair {
    rw: Vec<usize>,
    bqw: BinaryWord,
    m: usize,
}

impl EncodedPair {
    pub fn new(rw: Vec<usize>, bqw: BinaryWord, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidPair("m must be positive".into()));
        }
        if rw.is_empty() {
            return Err(Error::InvalidPair("empty remainder word".into()));
        }
        if let Some(r) = rw.iter().find(|&&r| r >= m) {
            return Err(Error::InvalidPair(format!(
                "remainder {r} not below m = {m}"
            )));
        }
        if bqw.zeros_count() + 1 != rw.len() {
            return Err(Error::InvalidPair(format!(
                "bqw has {} zeros but rw has length {}",
                bqw.zeros_count(),
                rw.len()
            )));
        }
        Ok(EncodedPair { rw, bqw, m })
    }

    pub fn rw(&self) -> &[usize] {
        &self.rw
    }

    pub fn bqw(&self) -> &BinaryWord {
        &self.bqw
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Quotient word: the one-run encoding of `bqw`.
    pub fn qw(&self) -> Composition {
        self.bqw.one_run_encoding()
    }

    /// Number of zeros `k` of the encoded word.
    pub fn k(&self) -> usize {
        self.rw.len() - 1
    }

    /// Length of the encoded word: `k + m·a(bqw) + Σ r_i`.
    pub fn n(&self) -> usize {
        self.k() + self.m * self.bqw.ones_count() + self.rw.iter().sum::<usize>()
    }

    /// `rw` rendered as digits, comma-separated when some digit exceeds 9.
    pub fn rw_string(&self) -> String {
        Composition::new(self.rw.clone()).to_string()
    }
}

impl fmt::Debug for EncodedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; m={})", self.rw_string(), self.bqw, self.m)
    }
}

/// `(rw, qw)` without the range check on `m`.
pub(crate) fn split_encoding(w: &[u8], m: usize) -> (Vec<usize>, Vec<usize>) {
    let ore = crate::bitword::one_run_encoding(w);
    ore.parts().iter().map(|&a| (a % m, a / m)).unzip()
}

/// The transient quotient word `qw(w)`.
pub fn quotient_word(w: &BinaryWord, m: usize) -> Result<Composition> {
    check_m(w, m)?;
    Ok(Composition::new(split_encoding(w.bits(), m).1))
}

pub fn encode(w: &BinaryWord, m: usize) -> Result<EncodedPair> {
    check_m(w, m)?;
    let (rw, qw) = split_encoding(w.bits(), m);
    // m <= n forces a nonempty bqw: either a zero exists, or a_0 = n >= m.
    let bqw = BinaryWord::from_bits(from_one_run_encoding(&qw))?;
    Ok(EncodedPair { rw, bqw, m })
}

pub fn decode(p: &EncodedPair) -> Result<BinaryWord> {
    let pair = EncodedPair::new(p.rw.clone(), p.bqw.clone(), p.m)?;
    let qw = pair.qw();
    let parts: Vec<usize> = pair
        .rw
        .iter()
        .zip(qw.parts())
        .map(|(&r, &q)| r + pair.m * q)
        .collect();
    BinaryWord::from_bits(from_one_run_encoding(&parts))
}

/// `θ`: rotates both words when `bqw` starts with 0, only `bqw` otherwise.
pub fn theta(p: &EncodedPair) -> EncodedPair {
    let mut rw = p.rw.clone();
    if p.bqw.bit(0) == 0 {
        rw.rotate_left(1);
    }
    EncodedPair {
        rw,
        bqw: p.bqw.rotate_left(1),
        m: p.m,
    }
}

/// Verifies `π(ρ(w)) = θ(π(w))`, that `π` inverts, and that the image lies
/// in `P_k`.
pub fn check_conjugacy(w: &BinaryWord, m: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("conjugacy", w.to_string(), m);
    let pair = encode(w, m)?;
    let next = encode(&rotate(w, m)?, m)?;
    report.push(Verdict::compare(
        "pi(rho(w)) = theta(pi(w))",
        None,
        &next,
        &theta(&pair),
    ));
    report.push(Verdict::compare(
        "decode(encode(w)) = w",
        None,
        &decode(&pair)?,
        w,
    ));
    report.push(Verdict::compare(
        "k + m*a(bqw) + sum(rw) = n",
        None,
        &pair.n(),
        &w.len(),
    ));
    Ok(report)
}

/// `ρ`-orbit size as `period(rw) × period(bqw)`, without walking the orbit.
pub fn orbit_size(w: &BinaryWord, m: usize) -> Result<usize> {
    let p = encode(w, m)?;
    Ok(necklace_period(p.rw()) * p.bqw().necklace_period())
}

/// The two factors `(s, t)` of [`orbit_size`]: necklace periods of `rw`
/// and `bqw`.
pub fn orbit_size_factors(w: &BinaryWord, m: usize) -> Result<(usize, usize)> {
    let p = encode(w, m)?;
    Ok((necklace_period(p.rw()), p.bqw().necklace_period()))
}

/// Largest `ρ`-orbit in `{0,1}^n`.
///
/// For `m >= 2` this is `max((n - m)², n)`, attained by `1^{m+1} 0^{n-m-1}`.
/// For `m = 1` every remainder is 0, `ρ` is the ordinary rotation and the
/// maximum is `n`.
pub fn max_orbit_size(n: usize, m: usize) -> Result<usize> {
    RotationParams::new(m, n)?;
    if m == 1 {
        return Ok(n);
    }
    Ok(((n - m) * (n - m)).max(n))
}

/// One `ρ`-orbit of a census, named by its lexicographically smallest word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitSummary {
    pub representative: BinaryWord,
    pub size: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DecomposeMode {
    /// Walk `{0,1}^n` in lexicographic order, claiming whole orbits with a
    /// visited set.
    Enumerate,
    /// Walk the `θ`-orbit classes of `P_k` through necklace representatives
    /// of `bqw`, with no visited set.
    #[default]
    Necklace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    pub mode: DecomposeMode,
    pub exec: Execution,
    pub max_n: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            mode: DecomposeMode::Necklace,
            exec: Execution::auto(),
            max_n: DEFAULT_SPACE_CAP,
        }
    }
}

/// Partitions `{0,1}^n` into `ρ`-orbits, sorted by representative.
pub fn decompose_space(n: usize, m: usize) -> Result<Vec<OrbitSummary>> {
    decompose_space_with(n, m, DecomposeOptions::default())
}

pub fn decompose_space_with(
    n: usize,
    m: usize,
    opts: DecomposeOptions,
) -> Result<Vec<OrbitSummary>> {
    RotationParams::new(m, n)?;
    let cap = opts.max_n.min(63);
    if n > cap {
        return Err(Error::SizeCap { size: n, cap });
    }
    let mut out = match opts.mode {
        DecomposeMode::Enumerate => decompose_enumerate(n, m),
        DecomposeMode::Necklace => decompose_necklace(n, m, opts.exec),
    };
    out.sort();
    Ok(out)
}

/// Words packed with letter `i` at bit `n - 1 - i`, so integer order is
/// lexicographic order.
#[derive(Clone, Copy)]
struct Packed {
    n: u32,
    mask: u64,
}

impl Packed {
    fn new(n: usize) -> Self {
        Packed {
            n: n as u32,
            mask: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        }
    }

    fn ones(k: u32) -> u64 {
        if k == 0 {
            0
        } else {
            u64::MAX >> (64 - k)
        }
    }

    fn leading_ones(self, x: u64) -> u32 {
        ((x << (64 - self.n)).leading_ones()).min(self.n)
    }

    fn rotate(self, x: u64, m: u32) -> u64 {
        let k = self.leading_ones(x);
        if k < m && k < self.n {
            ((x << (k + 1)) & self.mask) | Self::ones(k)
        } else if k == self.n {
            x
        } else {
            ((x << m) & self.mask) | Self::ones(m)
        }
    }
}

fn decompose_enumerate(n: usize, m: usize) -> Vec<OrbitSummary> {
    let packed = Packed::new(n);
    let total = 1u64 << n;
    let mut visited = vec![false; total as usize];
    let mut out = Vec::new();
    for start in 0..total {
        if visited[start as usize] {
            continue;
        }
        let mut size = 0;
        let mut x = start;
        loop {
            visited[x as usize] = true;
            size += 1;
            x = packed.rotate(x, m as u32);
            if x == start {
                break;
            }
        }
        out.push(OrbitSummary {
            representative: BinaryWord::from_index(start, n),
            size,
        });
    }
    out
}

/// All `u64` bit patterns of width `len` with exactly `ones` set bits, in
/// increasing order (Gosper's hack).
fn fixed_weight(len: u32, ones: u32) -> impl Iterator<Item = u64> {
    let limit = if len == 64 { u64::MAX } else { 1u64 << len };
    let first = if ones == 0 {
        0
    } else {
        u64::MAX >> (64 - ones)
    };
    let mut next = if ones > len { None } else { Some(first) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let nx = (((r ^ cur) >> 2) / c) | r;
            (r != 0 && nx < limit).then_some(nx)
        };
        (cur < limit).then_some(cur)
    })
}

/// True when `x` (width `len`, letter 0 at the top bit) is the smallest of
/// its rotations.
fn is_necklace_rep(x: u64, len: u32) -> bool {
    let p = Packed::new(len as usize);
    let mut y = x;
    for _ in 1..len {
        y = ((y << 1) & p.mask) | (y >> (len - 1));
        if y < x {
            return false;
        }
    }
    true
}

fn unpack(x: u64, len: u32) -> Vec<u8> {
    (0..len).map(|i| ((x >> (len - 1 - i)) & 1) as u8).collect()
}

/// Remainder words of length `len` over `0..m` summing to `total`.
fn remainder_words(len: usize, m: usize, total: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let slots = len - cur.len() - 1;
        for r in 0..m.min(left + 1) {
            if left - r <= slots * (m - 1) {
                cur.push(r);
                rec(len, m, left - r, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(len, m, total, &mut Vec::with_capacity(len), &mut out);
    out
}

fn decompose_necklace(n: usize, m: usize, exec: Execution) -> Vec<OrbitSummary> {
    // (k zeros, q ones in bqw)
    let mut classes = Vec::new();
    for k in 0..=n {
        let ones = n - k;
        for q in 0..=ones / m {
            let rsum = ones - m * q;
            if rsum <= (k + 1) * (m - 1) && k + q > 0 {
                classes.push((k, q, rsum));
            }
        }
    }
    let per_class = map_slice(exec, &classes, |&(k, q, rsum)| {
        let len = (k + q) as u32;
        let remainders = remainder_words(k + 1, m, rsum);
        let mut out = Vec::new();
        for b in fixed_weight(len, q as u32).filter(|&b| is_necklace_rep(b, len)) {
            let bqw = unpack(b, len);
            let t = necklace_period(&bqw);
            let step = bqw[..t].iter().filter(|&&x| x == 0).count();
            for r in &remainders {
                // rw-classes under rotation by `step`, canonical = smallest
                let mut cycle = 1;
                let mut canonical = true;
                let mut rot = r.clone();
                loop {
                    rot.rotate_left(step % (k + 1));
                    if rot == *r {
                        break;
                    }
                    if rot < *r {
                        canonical = false;
                        break;
                    }
                    cycle += 1;
                }
                if !canonical {
                    continue;
                }
                let size = t * cycle;
                let pair = EncodedPair {
                    rw: r.clone(),
                    bqw: BinaryWord::from_valid(bqw.clone()),
                    m,
                };
                let mut best = decode(&pair).expect("valid pair");
                let mut cur = pair;
                for _ in 1..size {
                    cur = theta(&cur);
                    let word = decode(&cur).expect("valid pair");
                    if word < best {
                        best = word;
                    }
                }
                out.push(OrbitSummary {
                    representative: best,
                    size,
                });
            }
        }
        out
    });
    per_class.into_iter().flatten().collect()
}

/// `orbit_size` for every word of `{0,1}^n`, indexed by lexicographic rank.
pub fn orbit_sizes(n: usize, m: usize, exec: Execution) -> Result<Vec<usize>> {
    RotationParams::new(m, n)?;
    if n > 63 {
        return Err(Error::SizeCap { size: n, cap: 63 });
    }
    Ok(map_range(exec, 0..(1u64 << n), |i| {
        orbit_size(&BinaryWord::from_index(i, n), m).expect("m checked")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::orbit;

    fn w(s: &str) -> BinaryWord {
        BinaryWord::parse(s).unwrap()
    }

    fn pair(rw: &[usize], bqw: &str, m: usize) -> EncodedPair {
        EncodedPair::new(rw.to_vec(), w(bqw), m).unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(
            encode(&w("1011110"), 3).unwrap(),
            pair(&[1, 1, 0], "010", 3)
        );
        assert_eq!(
            encode(&w("1111001"), 3).unwrap(),
            pair(&[1, 0, 1], "100", 3)
        );
        assert_eq!(
            encode(&w("0000000"), 3).unwrap(),
            pair(&[0; 8], "0000000", 3)
        );
        assert_eq!(quotient_word(&w("1011110"), 3).unwrap().parts(), &[0, 1, 0]);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&pair(&[1, 1, 0], "010", 3)).unwrap(), w("1011110"));
        assert_eq!(decode(&pair(&[1], "11", 3)).unwrap(), w("1111111"));
        for idx in 0..128 {
            let x = BinaryWord::from_index(idx, 7);
            assert_eq!(decode(&encode(&x, 3).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn pair_validation() {
        assert!(EncodedPair::new(vec![3], w("1"), 3).is_err());
        assert!(EncodedPair::new(vec![0, 0], w("11"), 3).is_err());
        assert!(EncodedPair::new(vec![], w("1"), 3).is_err());
        assert!(EncodedPair::new(vec![0], w("1"), 0).is_err());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(
            theta(&pair(&[1, 1, 0], "010", 3)),
            pair(&[1, 0, 1], "100", 3)
        );
        assert_eq!(
            theta(&pair(&[1, 0, 1], "100", 3)),
            pair(&[1, 0, 1], "001", 3)
        );
        assert_eq!(theta(&pair(&[2], "111", 3)), pair(&[2], "111", 3));
    }

    #[test]
    fn conjugacy_along_example_orbit() {
        for x in orbit(&w("1011110"), 3).unwrap().words() {
            assert!(check_conjugacy(x, 3).unwrap().passed());
        }
        assert!(check_conjugacy(&w("1101001"), 7).unwrap().passed());
    }

    #[test]
    fn orbit_size_examples() {
        assert_eq!(orbit_size(&w("1011110"), 3).unwrap(), 9);
        assert_eq!(orbit_size_factors(&w("1111000"), 3).unwrap(), (4, 4));
        assert_eq!(orbit_size(&w("1111101"), 3).unwrap(), 4);
    }

    #[test]
    fn max_orbit_size_examples() {
        assert_eq!(max_orbit_size(7, 3).unwrap(), 16);
        assert_eq!(orbit_size(&w("1111000"), 3).unwrap(), 16);
        assert_eq!(max_orbit_size(9, 9).unwrap(), 9);
        assert_eq!(max_orbit_size(10, 2).unwrap(), 64);
        assert_eq!(orbit_size(&w("1110000000"), 2).unwrap(), 64);
        assert!(max_orbit_size(3, 4).is_err());
        assert_eq!(max_orbit_size(6, 1).unwrap(), 6);
    }

    #[test]
    fn decompose_small() {
        let d = decompose_space(3, 1).unwrap();
        let sizes: Vec<usize> = d.iter().map(|o| o.size).collect();
        assert_eq!(sizes, vec![1, 3, 3, 1]);
        let reps: Vec<String> = d.iter().map(|o| o.representative.to_string()).collect();
        assert_eq!(reps, vec!["000", "001", "011", "111"]);
    }

    #[test]
    fn decompose_cap() {
        let opts = DecomposeOptions {
            max_n: 10,
            ..Default::default()
        };
        assert_eq!(
            decompose_space_with(11, 2, opts),
            Err(Error::SizeCap { size: 11, cap: 10 })
        );
    }

    #[test]
    fn packed_rotation_matches_rotate() {
        for n in 1..=10 {
            let p = Packed::new(n);
            for m in 1..=n {
                for idx in 0..(1u64 << n) {
                    let x = BinaryWord::from_index(idx, n);
                    let y = rotate(&x, m).unwrap();
                    assert_eq!(p.rotate(idx, m as u32), y.to_index());
                }
            }
        }
    }

    #[test]
    fn fixed_weight_enumeration() {
        let v: Vec<u64> = fixed_weight(4, 2).collect();
        assert_eq!(v, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(fixed_weight(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(fixed_weight(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(fixed_weight(2, 3).count(), 0);
    }

    #[test]
    fn remainder_word_enumeration() {
        let v = remainder_words(3, 3, 2);
        assert_eq!(v.len(), 6);
        assert!(v.iter().all(|r| r.iter().sum::<usize>() == 2));
        assert_eq!(remainder_words(2, 1, 0), vec![vec![0, 0]]);
        assert!(remainder_words(2, 1, 1).is_empty());
    }
}
