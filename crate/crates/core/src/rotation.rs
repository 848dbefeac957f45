//! The generalized rotation `ρ`, its orbits and the extension trace.
//!
//! With parameter `m`, `ρ` looks at the run of ones at the head of the word.
//! A run of `k < m` ones terminated by a zero is moved, together with its
//! zero, to the tail as `0 1^k`. A run of at least `m` ones gives up exactly
//! `m` ones to the tail. At `m = 1` this is the ordinary left rotation.

use std::collections::BTreeSet;

use crate::bitword::{leading_ones, BinaryWord};
use crate::error::{Error, Result};

/// Validated pair `1 <= m <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RotationParams {
    m: usize,
    n: usize,
}

impl RotationParams {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::MOutOfRange { m, n });
        }
        Ok(RotationParams { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

pub(crate) fn check_m(w: &BinaryWord, m: usize) -> Result<()> {
    RotationParams::new(m, w.len()).map(|_| ())
}

/// Upper bound on any orbit length in `{0,1}^n`.
pub(crate) fn orbit_limit(n: usize) -> usize {
    if n >= usize::BITS as usize - 1 {
        usize::MAX
    } else {
        1usize << n
    }
}

/// `ρ` on raw letters for any `m >= 1`.
///
/// Words shorter than `m` are accepted: an all-ones word is fixed (moving
/// `m` ones from head to tail changes nothing) and any other word has its
/// leading run terminated by a zero before position `m`. Snake words of the
/// toggle system need this.
pub(crate) fn rotate_slice(w: &[u8], m: usize) -> Vec<u8> {
    let n = w.len();
    let k = leading_ones(w);
    let mut out = Vec::with_capacity(n);
    if k < m && k < n {
        out.extend_from_slice(&w[k + 1..]);
        out.push(0);
        out.extend(std::iter::repeat_n(1, k));
    } else if k == n {
        out.extend_from_slice(w);
    } else {
        out.extend_from_slice(&w[m..]);
        out.extend(std::iter::repeat_n(1, m));
    }
    out
}

/// Applies `ρ` once. Requires `1 <= m <= |w|`.
pub fn rotate(w: &BinaryWord, m: usize) -> Result<BinaryWord> {
    check_m(w, m)?;
    Ok(BinaryWord::from_valid(rotate_slice(w.bits(), m)))
}

/// Applies `ρ⁻¹ = Rev ∘ ρ ∘ Rev`.
pub fn rotate_inv(w: &BinaryWord, m: usize) -> Result<BinaryWord> {
    check_m(w, m)?;
    let rev = w.reverse();
    Ok(BinaryWord::from_valid(rotate_slice(rev.bits(), m)).reverse())
}

/// A `ρ`-orbit in application order: `words[k] = ρ^k(words[0])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    words: Vec<BinaryWord>,
}

impl Orbit {
    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn contains(&self, w: &BinaryWord) -> bool {
        self.words.contains(w)
    }
}

/// Iterates `ρ` from `w` until it first returns to `w`.
pub fn orbit(w: &BinaryWord, m: usize) -> Result<Orbit> {
    check_m(w, m)?;
    orbit_relaxed(w, m)
}

/// Same as [`orbit`] but without the `m <= |w|` check; see `rotate_slice`.
pub(crate) fn orbit_relaxed(w: &BinaryWord, m: usize) -> Result<Orbit> {
    let limit = orbit_limit(w.len());
    let mut words = vec![w.clone()];
    loop {
        let next = rotate_slice(words.last().unwrap().bits(), m);
        if next == w.bits() {
            return Ok(Orbit { words });
        }
        if words.len() >= limit {
            return Err(Error::OrbitOverflow { limit });
        }
        words.push(BinaryWord::from_valid(next));
    }
}

/// The word `w^(p)` obtained by extending `w` once per `ρ` step, together
/// with its cut points `c_k` and the two length-`l` views `w̄` and `ŵ`.
///
/// `full[c_k .. c_k + n]` is `ρ^k(w)`, and `full` is periodic with period `l`,
/// so both `bar` and `hat` are read cyclically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionTrace {
    pub full: BinaryWord,
    /// `c_0 = 0 < c_1 < ... < c_p = l`; both endpoints included.
    pub c: Vec<usize>,
    /// `w̄`: `full` without its length-`n` suffix.
    pub bar: BinaryWord,
    /// `ŵ`: `full` without its length-`n` prefix.
    pub hat: BinaryWord,
    pub n: usize,
    pub m: usize,
}

impl ExtensionTrace {
    pub fn l(&self) -> usize {
        self.bar.len()
    }

    /// Orbit size `p`.
    pub fn p(&self) -> usize {
        self.c.len() - 1
    }

    pub fn bar_at(&self, i: isize) -> u8 {
        self.bar.bit(self.wrap(i))
    }

    pub fn hat_at(&self, i: isize) -> u8 {
        self.hat.bit(self.wrap(i))
    }

    /// Reduces an index modulo `l` into `0..l`.
    pub fn wrap(&self, i: isize) -> usize {
        i.rem_euclid(self.l() as isize) as usize
    }
}

pub fn extension_trace(w: &BinaryWord, m: usize) -> Result<ExtensionTrace> {
    check_m(w, m)?;
    let n = w.len();
    let limit = orbit_limit(n);
    let mut full = w.bits().to_vec();
    let mut c = vec![0usize];
    loop {
        let current = &full[full.len() - n..];
        let k = leading_ones(current);
        if k < m && k < n {
            full.push(0);
            full.extend(std::iter::repeat_n(1, k));
        } else {
            full.extend(std::iter::repeat_n(1, m));
        }
        c.push(full.len() - n);
        if &full[full.len() - n..] == w.bits() {
            break;
        }
        if c.len() > limit {
            return Err(Error::OrbitOverflow { limit });
        }
    }
    let l = full.len() - n;
    let bar = BinaryWord::from_valid(full[..l].to_vec());
    let hat = BinaryWord::from_valid(full[n..].to_vec());
    Ok(ExtensionTrace {
        full: BinaryWord::from_valid(full),
        c,
        bar,
        hat,
        n,
        m,
    })
}

/// Class of an index of `w̄` (or `ŵ`): a zero, a one closing a `ρ` step
/// (`T`, tail), or any other one (`H`, head).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexClass {
    Zero,
    Tail,
    Head,
}

impl IndexClass {
    pub const ALL: [IndexClass; 3] = [IndexClass::Zero, IndexClass::Tail, IndexClass::Head];

    pub fn label(self) -> &'static str {
        match self {
            IndexClass::Zero => "0",
            IndexClass::Tail => "T",
            IndexClass::Head => "H",
        }
    }
}

/// The partitions `I = I_0 ∪ I_T ∪ I_H` of the indices of `w̄` and
/// `Î_0 ∪ Î_T ∪ Î_H` of the indices of `ŵ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexDecomposition {
    pub i0: BTreeSet<usize>,
    pub it: BTreeSet<usize>,
    pub ih: BTreeSet<usize>,
    pub hat_i0: BTreeSet<usize>,
    pub hat_it: BTreeSet<usize>,
    pub hat_ih: BTreeSet<usize>,
    bar_class: Vec<IndexClass>,
    hat_class: Vec<IndexClass>,
}

impl IndexDecomposition {
    pub fn bar_class(&self, i: usize) -> IndexClass {
        self.bar_class[i]
    }

    pub fn hat_class(&self, i: usize) -> IndexClass {
        self.hat_class[i]
    }

    pub fn bar_set(&self, class: IndexClass) -> &BTreeSet<usize> {
        match class {
            IndexClass::Zero => &self.i0,
            IndexClass::Tail => &self.it,
            IndexClass::Head => &self.ih,
        }
    }

    pub fn hat_set(&self, class: IndexClass) -> &BTreeSet<usize> {
        match class {
            IndexClass::Zero => &self.hat_i0,
            IndexClass::Tail => &self.hat_it,
            IndexClass::Head => &self.hat_ih,
        }
    }
}

pub fn index_decomposition(t: &ExtensionTrace) -> IndexDecomposition {
    let l = t.l();
    let p = t.p();
    let mut bar_class = vec![IndexClass::Head; l];
    let mut hat_class = vec![IndexClass::Head; l];
    for k in 0..p {
        let i = t.wrap(t.c[k] as isize - 1);
        if t.bar.bit(i) == 1 {
            bar_class[i] = IndexClass::Tail;
        }
        let i = t.c[k];
        if t.hat.bit(i) == 1 {
            hat_class[i] = IndexClass::Tail;
        }
    }
    for i in 0..l {
        if t.bar.bit(i) == 0 {
            bar_class[i] = IndexClass::Zero;
        }
        if t.hat.bit(i) == 0 {
            hat_class[i] = IndexClass::Zero;
        }
    }
    let collect = |classes: &[IndexClass], want: IndexClass| -> BTreeSet<usize> {
        (0..l).filter(|&i| classes[i] == want).collect()
    };
    IndexDecomposition {
        i0: collect(&bar_class, IndexClass::Zero),
        it: collect(&bar_class, IndexClass::Tail),
        ih: collect(&bar_class, IndexClass::Head),
        hat_i0: collect(&hat_class, IndexClass::Zero),
        hat_it: collect(&hat_class, IndexClass::Tail),
        hat_ih: collect(&hat_class, IndexClass::Head),
        bar_class,
        hat_class,
    }
}
