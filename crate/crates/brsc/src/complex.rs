//! Finite simplicial complexes and their elementary algebra.
//!
//! A [`Complex`] is stored canonically by its facets. The full face family is
//! materialized lazily, as a dense bitset for small vertex counts or a hash
//! set otherwise, the first time a membership query needs it.

use std::fmt;
use std::sync::OnceLock;

use rustc_hash::FxHashSet;

use crate::bits::{self, Face};
use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

const DENSE_LIMIT: usize = 22;
const HASH_LIMIT: u64 = 1 << 22;

/// A family of vertex subsets, kept sorted by bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    members: Vec<Face>,
}

impl SetFamily {
    pub fn new(n: usize, members: impl IntoIterator<Item = Face>) -> Self {
        let mut members: Vec<Face> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        SetFamily { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Face] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Face) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Face> + '_ {
        self.members.iter().copied()
    }

    /// Members with exactly `k` elements.
    pub fn of_size(&self, k: usize) -> Vec<Face> {
        self.iter().filter(|&x| bits::card(x) == k).collect()
    }
}

#[derive(Clone)]
enum FaceIndex {
    Dense(Vec<u64>),
    Hashed(FxHashSet<Face>),
    Scan,
}

/// A simplicial complex `(V, H)` with `V = 0..n`.
///
/// Always contains the empty face and every singleton.
pub struct Complex {
    n: usize,
    facets: Vec<Face>,
    labels: Vec<String>,
    index: OnceLock<FaceIndex>,
}

/// The counting function of a complex: `alpha[k]` faces of size `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingFunction {
    pub alpha: Vec<u64>,
    pub unimodal: bool,
}

/// True iff the sequence rises weakly to some peak and then falls weakly.
pub fn is_unimodal(seq: &[u64]) -> bool {
    let mut i = 0;
    while i + 1 < seq.len() && seq[i] <= seq[i + 1] {
        i += 1;
    }
    while i + 1 < seq.len() && seq[i] >= seq[i + 1] {
        i += 1;
    }
    i + 1 >= seq.len()
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("vertex set must be nonempty"));
    }
    if n > MAX_VERTICES {
        return Err(Error::capacity(format!(
            "{n} vertices exceed the limit of {MAX_VERTICES}"
        )));
    }
    Ok(())
}

/// Maximal members of a family under inclusion, sorted by bitmask.
pub fn maximal_sets(sets: impl IntoIterator<Item = Face>) -> Vec<Face> {
    let mut v: Vec<Face> = sets.into_iter().collect();
    v.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    v.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for x in v {
        if !kept.iter().any(|&y| bits::is_subset(x, y)) {
            kept.push(x);
        }
    }
    kept.sort_unstable();
    kept
}

impl Complex {
    /// Down-closure of `generators` together with all singletons.
    pub fn new(n: usize, generators: impl IntoIterator<Item = Face>) -> Result<Self> {
        check_n(n)?;
        let all = bits::full(n);
        let mut gens = Vec::new();
        for g in generators {
            if g & !all != 0 {
                return Err(Error::domain(format!(
                    "generator {g:#b} does not fit in {n} vertices"
                )));
            }
            gens.push(g);
        }
        gens.extend((0..n).map(bits::bit));
        Ok(Self::from_facets_unchecked(n, maximal_sets(gens)))
    }

    /// Builds a complex from a family already known to be closed downward.
    pub fn from_down_closed(n: usize, faces: &FxHashSet<Face>) -> Result<Self> {
        check_n(n)?;
        let mut facets: Vec<Face> = faces
            .iter()
            .copied()
            .filter(|&x| {
                (0..n).all(|p| x & bits::bit(p) != 0 || !faces.contains(&(x | bits::bit(p))))
            })
            .collect();
        for p in 0..n {
            if !faces.contains(&bits::bit(p)) {
                facets.push(bits::bit(p));
            }
        }
        facets.sort_unstable();
        Ok(Self::from_facets_unchecked(n, facets))
    }

    pub(crate) fn from_facets_unchecked(n: usize, facets: Vec<Face>) -> Self {
        Complex {
            n,
            facets,
            labels: default_labels(n),
            index: OnceLock::new(),
        }
    }

    /// `(V, P_{<=k}(V))` truncated full simplex, i.e. the uniform matroid `U_{k,n}`.
    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::domain(format!("U_{{{k},{n}}} needs 1 <= k <= n")));
        }
        Self::new(n, bits::p_k(n, k))
    }

    /// Replaces the vertex labels. Labels must be distinct.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::domain(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        let distinct: FxHashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::domain("vertex labels must be distinct"));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Face {
        bits::full(self.n)
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.facets.iter().map(|&b| bits::card(b)).max().unwrap_or(1) - 1
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim() + 1;
        self.facets.iter().all(|&b| bits::card(b) == d)
    }

    /// Facets of maximum size.
    pub fn top_facets(&self) -> Vec<Face> {
        let d = self.dim() + 1;
        self.facets.iter().copied().filter(|&b| bits::card(b) == d).collect()
    }

    fn index(&self) -> &FaceIndex {
        self.index.get_or_init(|| {
            let total: u64 = self
                .facets
                .iter()
                .map(|&b| 1u64 << bits::card(b).min(63))
                .fold(0u64, |a, b| a.saturating_add(b));
            if self.n <= DENSE_LIMIT {
                let size = 1usize << self.n;
                let mut marks = vec![0u64; size.div_ceil(64)];
                let set = |m: &mut Vec<u64>, x: usize| m[x >> 6] |= 1 << (x & 63);
                let get = |m: &Vec<u64>, x: usize| m[x >> 6] >> (x & 63) & 1 == 1;
                if total <= (self.n as u64 + 1) << self.n {
                    for &b in &self.facets {
                        for s in bits::submasks(b) {
                            set(&mut marks, s as usize);
                        }
                    }
                } else {
                    for &b in &self.facets {
                        set(&mut marks, b as usize);
                    }
                    for i in 0..self.n {
                        let bi = 1usize << i;
                        for x in 0..size {
                            if x & bi != 0 && get(&marks, x) {
                                set(&mut marks, x ^ bi);
                            }
                        }
                    }
                }
                FaceIndex::Dense(marks)
            } else if total <= HASH_LIMIT {
                let mut set = FxHashSet::default();
                for &b in &self.facets {
                    if set.contains(&b) {
                        continue;
                    }
                    for s in bits::submasks(b) {
                        set.insert(s);
                    }
                }
                FaceIndex::Hashed(set)
            } else {
                FaceIndex::Scan
            }
        })
    }

    /// Membership test `x ∈ H`.
    pub fn is_face(&self, x: Face) -> bool {
        if x & !self.vertices() != 0 {
            return false;
        }
        match self.index() {
            FaceIndex::Dense(m) => m[(x >> 6) as usize] >> (x & 63) & 1 == 1,
            FaceIndex::Hashed(s) => s.contains(&x),
            FaceIndex::Scan => self.facets.iter().any(|&b| bits::is_subset(x, b)),
        }
    }

    /// All faces, sorted by bitmask.
    pub fn faces(&self) -> Vec<Face> {
        let mut out: Vec<Face> = match self.index() {
            FaceIndex::Dense(m) => (0..(1u64 << self.n))
                .filter(|&x| m[(x >> 6) as usize] >> (x & 63) & 1 == 1)
                .collect(),
            FaceIndex::Hashed(s) => s.iter().copied().collect(),
            FaceIndex::Scan => {
                let mut s = FxHashSet::default();
                for &b in &self.facets {
                    s.extend(bits::submasks(b));
                }
                s.into_iter().collect()
            }
        };
        out.sort_unstable();
        out
    }

    /// Faces with exactly `k` elements, sorted by bitmask.
    pub fn faces_of_size(&self, k: usize) -> Vec<Face> {
        let mut s = FxHashSet::default();
        for &b in &self.facets {
            if bits::card(b) >= k {
                s.extend(bits::k_subsets(b, k));
            }
        }
        let mut v: Vec<Face> = s.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// Restriction `H|_W = (W, H ∩ 2^W)`, re-indexed onto `0..|W|`.
    pub fn restriction(&self, w: Face) -> Result<Complex> {
        if w == 0 || w & !self.vertices() != 0 {
            return Err(Error::domain("restriction needs a nonempty subset of V"));
        }
        let facets = maximal_sets(self.facets.iter().map(|&b| bits::compress(b & w, w)));
        let labels = bits::indices(w).map(|i| self.labels[i].clone()).collect();
        let mut c = Complex::from_facets_unchecked(bits::card(w), facets);
        c.labels = labels;
        Ok(c)
    }

    /// Contraction `H/W = (V \ W, {X : X ∪ W ∈ H})` for a face `W`.
    pub fn contraction(&self, w: Face) -> Result<Complex> {
        if !self.is_face(w) {
            return Err(Error::domain("contraction needs W to be a face"));
        }
        let rest = self.vertices() & !w;
        if rest == 0 {
            return Err(Error::domain("contraction by V leaves no vertices"));
        }
        for p in bits::indices(rest) {
            if !self.is_face(w | bits::bit(p)) {
                return Err(Error::domain(format!(
                    "vertex {} is not independent over W, so H/W has no singleton for it",
                    self.labels[p]
                )));
            }
        }
        let facets = maximal_sets(
            self.facets
                .iter()
                .filter(|&&b| bits::is_subset(w, b))
                .map(|&b| bits::compress(b & !w, rest)),
        );
        let labels = bits::indices(rest).map(|i| self.labels[i].clone()).collect();
        let mut c = Complex::from_facets_unchecked(bits::card(rest), facets);
        c.labels = labels;
        Ok(c)
    }

    /// Truncation `H_k = H ∩ P_{<=k}(V)`.
    pub fn truncate(&self, k: usize) -> Result<Complex> {
        if k == 0 {
            return Err(Error::domain("truncation needs k >= 1"));
        }
        let mut out = FxHashSet::default();
        for &b in &self.facets {
            if bits::card(b) <= k {
                out.insert(b);
            } else {
                out.extend(bits::k_subsets(b, k));
            }
        }
        let mut facets: Vec<Face> = out.into_iter().collect();
        facets.sort_unstable();
        Ok(self.relabeled(Complex::from_facets_unchecked(self.n, facets)))
    }

    fn relabeled(&self, mut c: Complex) -> Complex {
        c.labels = self.labels.clone();
        c
    }

    fn same_vertices(&self, other: &Complex, op: &str) -> Result<()> {
        if self.n != other.n || self.labels != other.labels {
            return Err(Error::domain(format!("{op} needs identical vertex sets")));
        }
        Ok(())
    }

    /// Union `(V, H ∪ H')` over a common vertex set.
    pub fn union(&self, other: &Complex) -> Result<Complex> {
        self.same_vertices(other, "union")?;
        let facets = maximal_sets(self.facets.iter().chain(other.facets.iter()).copied());
        Ok(self.relabeled(Complex::from_facets_unchecked(self.n, facets)))
    }

    /// Sum `(V, {I ∪ I' : I ∈ H, I' ∈ H'})` over a common vertex set.
    pub fn sum(&self, other: &Complex) -> Result<Complex> {
        self.same_vertices(other, "sum")?;
        let mut s = FxHashSet::default();
        for &a in &self.facets {
            for &b in &other.facets {
                s.insert(a | b);
            }
        }
        Ok(self.relabeled(Complex::from_facets_unchecked(self.n, maximal_sets(s))))
    }

    /// `H ⊕ H'` over the disjoint union of the vertex sets: faces `X ∪ X'`.
    pub fn oplus(&self, other: &Complex) -> Result<Complex> {
        let mine: FxHashSet<&String> = self.labels.iter().collect();
        if other.labels.iter().any(|l| mine.contains(l)) {
            return Err(Error::domain("oplus needs disjoint vertex sets"));
        }
        let n = self.n + other.n;
        check_n(n)?;
        let mut facets = Vec::new();
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(a | (b << self.n));
            }
        }
        facets.sort_unstable();
        let mut c = Complex::from_facets_unchecked(n, facets);
        c.labels = self.labels.iter().chain(other.labels.iter()).cloned().collect();
        Ok(c)
    }

    /// Join `(V ∪ V', H ∪ H')`, matching vertices by label.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        let mut labels = self.labels.clone();
        let mut map = Vec::with_capacity(other.n);
        for l in &other.labels {
            match labels.iter().position(|x| x == l) {
                Some(i) => map.push(i),
                None => {
                    labels.push(l.clone());
                    map.push(labels.len() - 1);
                }
            }
        }
        check_n(labels.len())?;
        let gens = self
            .facets
            .iter()
            .copied()
            .chain(other.facets.iter().map(|&b| bits::map_face(b, &map)));
        let mut c = Complex::new(labels.len(), gens.collect::<Vec<_>>())?;
        c.labels = labels;
        Ok(c)
    }

    /// The largest pure subcomplex, on the vertices covered by top faces.
    pub fn pure_part(&self) -> Complex {
        let tops = self.top_facets();
        let cover = tops.iter().fold(0, |a, &b| a | b);
        let facets = tops.iter().map(|&b| bits::compress(b, cover)).collect::<Vec<_>>();
        let labels = bits::indices(cover).map(|i| self.labels[i].clone()).collect();
        let mut c = Complex::from_facets_unchecked(bits::card(cover), facets);
        c.labels = labels;
        c
    }

    /// `alpha[k] = |H ∩ P_k(V)|` for `k = 0..=dim+1`, with the unimodality flag.
    pub fn counting_function(&self) -> CountingFunction {
        let top = self.dim() + 1;
        let mut alpha = vec![0u64; top + 1];
        for x in self.faces() {
            alpha[bits::card(x)] += 1;
        }
        let unimodal = is_unimodal(&alpha);
        CountingFunction { alpha, unimodal }
    }

    /// `Some(d)` iff `P_{<=d}(V) ⊆ H` where `d = dim`.
    pub fn is_paving(&self) -> Option<usize> {
        let d = self.dim();
        let small = self
            .facets
            .iter()
            .filter(|&&b| bits::card(b) < d)
            .count();
        if small > 0 {
            return None;
        }
        let have = self.faces_of_size(d).len() as u64;
        (have == bits::binom(self.n, d)).then_some(d)
    }

    /// `def H = P_{d+1}(V) \ H` for a paving complex of dimension `d`.
    pub fn defect(&self) -> Result<SetFamily> {
        let d = self
            .is_paving()
            .ok_or_else(|| Error::domain("defect is only defined for paving complexes"))?;
        Ok(SetFamily::new(
            self.n,
            bits::p_k(self.n, d + 1).into_iter().filter(|&x| !self.is_face(x)),
        ))
    }

    /// Paving complex of dimension `d` with the given top-face defect.
    pub fn paving_from_defect(n: usize, d: usize, defect: &[Face]) -> Result<Complex> {
        check_n(n)?;
        let missing: FxHashSet<Face> = defect.iter().copied().collect();
        let tops: Vec<Face> = bits::p_k(n, d + 1)
            .into_iter()
            .filter(|x| !missing.contains(x))
            .collect();
        if tops.is_empty() {
            return Err(Error::domain("defect removes every top face"));
        }
        Complex::new(n, tops.into_iter().chain(bits::p_k(n, d)))
    }

    /// Image under the vertex map `perm[i]`, keeping labels by position.
    pub fn permuted(&self, perm: &[usize]) -> Complex {
        let mut facets: Vec<Face> = self.facets.iter().map(|&b| bits::map_face(b, perm)).collect();
        facets.sort_unstable();
        self.relabeled(Complex::from_facets_unchecked(self.n, facets))
    }

    /// The same complex with its vertices listed in the order of `labels`.
    pub fn reorder(&self, labels: &[String]) -> Result<Complex> {
        if labels.len() != self.n {
            return Err(Error::domain("reorder needs one label per vertex"));
        }
        let mut perm = vec![0; self.n];
        for (i, l) in self.labels.iter().enumerate() {
            perm[i] = labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::domain(format!("label {l:?} missing from target order")))?;
        }
        let mut c = self.permuted(&perm);
        c.labels = labels.to_vec();
        Ok(c)
    }

    fn single_char_labels(&self) -> bool {
        self.labels.iter().all(|l| l.chars().count() == 1)
    }

    /// Renders a face with this complex's labels, e.g. `135`.
    pub fn show(&self, x: Face) -> String {
        let parts: Vec<&str> = bits::indices(x).map(|i| self.labels[i].as_str()).collect();
        if parts.is_empty() {
            "∅".to_string()
        } else if self.single_char_labels() {
            parts.concat()
        } else {
            format!("{{{}}}", parts.join(","))
        }
    }

    /// Renders a family of faces.
    pub fn show_all(&self, xs: impl IntoIterator<Item = Face>) -> String {
        let v: Vec<String> = xs.into_iter().map(|x| self.show(x)).collect();
        v.join(" ")
    }

    /// Parses a face written with this complex's labels: `135` when every
    /// label is one character, otherwise a comma-separated list.
    pub fn parse_face(&self, s: &str) -> Result<Face> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let tokens: Vec<String> = if self.single_char_labels() && !s.contains(',') {
            s.chars().filter(|c| !c.is_whitespace()).map(String::from).collect()
        } else {
            s.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect()
        };
        let mut x = 0;
        for t in tokens {
            let i = self
                .labels
                .iter()
                .position(|l| *l == t)
                .ok_or_else(|| Error::Parse(format!("unknown vertex label {t:?}")))?;
            x |= bits::bit(i);
        }
        Ok(x)
    }

    /// Parses a whitespace-separated list of faces.
    pub fn parse_faces(&self, s: &str) -> Result<Vec<Face>> {
        s.split_whitespace().map(|t| self.parse_face(t)).collect()
    }
}

impl Clone for Complex {
    fn clone(&self) -> Self {
        Complex {
            n: self.n,
            facets: self.facets.clone(),
            labels: self.labels.clone(),
            index: OnceLock::new(),
        }
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets=[{}])", self.n, self.show_all(self.facets.iter().copied()))
    }
}
