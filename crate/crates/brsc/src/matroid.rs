//! Matroids and near-matroids, matroid extensions, and shellability.

use itertools::Itertools;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::bits::{self, Face};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::lattice::{self, MooreFamily};
use crate::t_operator;

/// Result of the exchange test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidVerdict {
    pub matroid: bool,
    /// Faces `I`, `J` with `|I| = |J| + 1` and no `i ∈ I \ J` with `J ∪ i ∈ H`.
    pub violation: Option<(Face, Face)>,
}

/// Exchange property over faces of adjacent sizes.
pub fn is_matroid(c: &Complex) -> MatroidVerdict {
    let top = c.dim() + 1;
    let by_size: Vec<Vec<Face>> = (0..=top).map(|k| c.faces_of_size(k)).collect();
    for k in 0..top {
        for &j in &by_size[k] {
            for &i in &by_size[k + 1] {
                if !bits::indices(i & !j).any(|x| c.is_face(j | bits::bit(x))) {
                    return MatroidVerdict { matroid: false, violation: Some((i, j)) };
                }
            }
        }
    }
    MatroidVerdict { matroid: true, violation: None }
}

/// Faces with equal closure below `V` have equal size.
pub fn is_near_matroid(c: &Complex) -> bool {
    rho(c).is_ok()
}

/// `ρ(F) = |X|` for any face `X` with closure `F ≠ V`; errors when the
/// complex is not a near-matroid.
pub fn rho(c: &Complex) -> Result<FxHashMap<Face, usize>> {
    let all = c.vertices();
    let mut out: FxHashMap<Face, usize> = FxHashMap::default();
    for x in c.faces() {
        let f = lattice::closure(c, x);
        if f == all {
            continue;
        }
        let k = bits::card(x);
        if let Some(&old) = out.get(&f) {
            if old != k {
                return Err(Error::domain(format!(
                    "faces {} and another of size {old} share the closure {}",
                    c.show(x),
                    c.show(f)
                )));
            }
        } else {
            out.insert(f, k);
        }
    }
    Ok(out)
}

/// `{F ∈ Fl H : ρ(F) < k} ∪ {V}`, whose transversal complex is `H_k` for a
/// representable near-matroid.
pub fn rank_filtered_flats(c: &Complex, k: usize) -> Result<MooreFamily> {
    let r = rho(c)?;
    let keep = lattice::flats(c)
        .iter()
        .filter(|f| r.get(f).is_some_and(|&x| x < k))
        .chain([c.vertices()])
        .collect::<Vec<_>>();
    MooreFamily::new(c.n(), keep)
}

/// Flats of `F_k` lying on some chain of length `k` inside `F_k`.
pub fn chain_flats(c: &Complex, k: usize) -> Result<MooreFamily> {
    let fk = rank_filtered_flats(c, k)?;
    let m: Vec<Face> = fk.iter().collect();
    // Members sorted by size, so strict inclusions go forward.
    let mut order: Vec<usize> = (0..m.len()).collect();
    order.sort_by_key(|&i| bits::card(m[i]));
    let below = |a: usize, b: usize| m[a] != m[b] && bits::is_subset(m[a], m[b]);
    let mut down = vec![0usize; m.len()];
    for (t, &i) in order.iter().enumerate() {
        down[i] = order[..t].iter().filter(|&&j| below(j, i)).map(|&j| down[j] + 1).max().unwrap_or(0);
    }
    let mut up = vec![0usize; m.len()];
    for (t, &i) in order.iter().enumerate().rev() {
        up[i] = order[t + 1..].iter().filter(|&&j| below(i, j)).map(|&j| up[j] + 1).max().unwrap_or(0);
    }
    let keep: Vec<Face> = (0..m.len()).filter(|&i| down[i] + up[i] >= k).map(|i| m[i]).collect();
    if keep.is_empty() {
        return Err(Error::domain(format!("no chain of length {k} among the flats")));
    }
    MooreFamily::new(c.n(), keep)
}

/// Verdicts for the two truncation representations of a near-matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearMatroidTruncation {
    /// `J(F_k) = H_k`.
    pub truncation: bool,
    /// `J(F'_k) = pure(H_k)`.
    pub pure: bool,
}

impl NearMatroidTruncation {
    pub fn holds(&self) -> bool {
        self.truncation && self.pure
    }
}

/// Checks that `M(F_k)` represents `H_k` and `M(F'_k)` represents
/// `pure(H_k)` for a representable near-matroid.
pub fn truncation_is_brsc_for_near_matroid(c: &Complex, k: usize) -> Result<NearMatroidTruncation> {
    if !lattice::is_boolean_representable(c).representable {
        return Err(Error::domain("the complex is not boolean representable"));
    }
    if k == 0 || k > c.dim() + 1 {
        return Err(Error::domain(format!("k must lie in 1..={}", c.dim() + 1)));
    }
    let hk = c.truncate(k)?;
    let truncation = lattice::transversal_complex(&rank_filtered_flats(c, k)?)? == hk;
    let pure = lattice::transversal_complex(&chain_flats(c, k)?)? == hk.pure_part();
    Ok(NearMatroidTruncation { truncation, pure })
}

/// What happens to the pure part of a truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureReport {
    pub k: usize,
    pub pure_k_is_brsc: bool,
    pub pure_k_is_tbrsc: bool,
}

/// Representability of `pure(H_k)` for a representable `H`.
pub fn check_pure_conjecture(c: &Complex, k: usize) -> Result<PureReport> {
    if !lattice::is_boolean_representable(c).representable {
        return Err(Error::domain("the complex is not boolean representable"));
    }
    let p = c.truncate(k)?.pure_part();
    Ok(PureReport {
        k,
        pure_k_is_brsc: lattice::is_boolean_representable(&p).representable,
        pure_k_is_tbrsc: t_operator::is_tbrsc(&p),
    })
}

/// Outcome of the codimension-one extension test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionVerdict {
    /// Codimension 1 and `J(T(H))` is a matroid extension, hence the only one.
    UniqueExtension,
    /// Codimension 1 and `J(T(H))` is not a matroid extension.
    NoExtension,
    /// Codimension other than 1.
    Inconclusive,
}

impl ExtensionVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExtensionVerdict::UniqueExtension => "unique_extension",
            ExtensionVerdict::NoExtension => "no_extension",
            ExtensionVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// `J(T(H))` and what it says about proper matroid extensions of `H`.
pub fn matroid_extension_candidate(c: &Complex) -> Result<(Complex, ExtensionVerdict)> {
    if !is_matroid(c).matroid {
        return Err(Error::domain("the complex is not a matroid"));
    }
    let j = lattice::transversal_complex(&t_operator::t_family(c))?;
    let verdict = if t_operator::codimension(c) != 1 {
        ExtensionVerdict::Inconclusive
    } else if is_matroid(&j).matroid && j.truncate(c.dim() + 1)? == *c {
        ExtensionVerdict::UniqueExtension
    } else {
        ExtensionVerdict::NoExtension
    };
    Ok((j, verdict))
}

/// Result of the exhaustive extension search.
#[derive(Clone, Debug)]
pub struct ExtensionSearch {
    /// Every matroid `H ∪ S` with `S` a nonempty family of `(d+2)`-sets.
    pub extensions: Vec<Complex>,
    /// Number of candidate `(d+2)`-sets.
    pub variables: usize,
    pub nodes: u64,
    /// False when the budget ran out; `extensions` is then partial.
    pub complete: bool,
}

struct Clause {
    head: usize,
    cands: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Val {
    Unset,
    True,
    False,
}

struct Solver<'a> {
    clauses: &'a [Clause],
    by_head: Vec<Vec<usize>>,
    by_cand: Vec<Vec<usize>>,
    val: Vec<Val>,
    trail: Vec<usize>,
    nodes: u64,
    budget: u64,
    solutions: Vec<Vec<usize>>,
}

impl Solver<'_> {
    fn assign(&mut self, v: usize, x: Val) -> bool {
        let mut queue = vec![(v, x)];
        while let Some((v, x)) = queue.pop() {
            match self.val[v] {
                Val::Unset => {
                    self.val[v] = x;
                    self.trail.push(v);
                }
                y if y == x => continue,
                _ => return false,
            }
            let touched: Vec<usize> = if x == Val::True {
                self.by_head[v].clone()
            } else {
                let mut t = self.by_cand[v].clone();
                t.extend(self.by_head[v].iter().copied());
                t
            };
            for ci in touched {
                let cl = &self.clauses[ci];
                if self.val[cl.head] == Val::False {
                    continue;
                }
                if cl.cands.iter().any(|&u| self.val[u] == Val::True) {
                    continue;
                }
                let open: Vec<usize> =
                    cl.cands.iter().copied().filter(|&u| self.val[u] == Val::Unset).collect();
                match (self.val[cl.head], open.len()) {
                    (Val::True, 0) => return false,
                    (_, 0) => queue.push((cl.head, Val::False)),
                    (Val::True, 1) => queue.push((open[0], Val::True)),
                    _ => {}
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("nonempty");
            self.val[v] = Val::Unset;
        }
    }

    fn search(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget { nodes: self.nodes });
        }
        let Some(v) = (0..self.val.len()).find(|&v| self.val[v] == Val::Unset) else {
            let s: Vec<usize> = (0..self.val.len()).filter(|&v| self.val[v] == Val::True).collect();
            if !s.is_empty() {
                self.solutions.push(s);
            }
            return Ok(());
        };
        for x in [Val::True, Val::False] {
            let mark = self.trail.len();
            if self.assign(v, x) {
                self.search()?;
            }
            self.undo(mark);
        }
        Ok(())
    }
}

/// All proper matroid extensions of dimension `d + 1` of a matroid `H` of
/// dimension `d`, by DPLL over the `(d+2)`-sets all of whose `(d+1)`-subsets
/// are faces. Higher-dimensional extensions truncate to these.
pub fn search_matroid_extensions(c: &Complex, budget: u64) -> Result<ExtensionSearch> {
    if !is_matroid(c).matroid {
        return Err(Error::domain("extensions are searched for matroids only"));
    }
    let d = c.dim();
    let tops = c.faces_of_size(d + 1);
    let vars: Vec<Face> = bits::p_k(c.n(), d + 2)
        .into_iter()
        .filter(|&x| bits::k_subsets(x, d + 1).iter().all(|&y| c.is_face(y)))
        .collect();
    let index: FxHashMap<Face, usize> = vars.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut clauses = Vec::new();
    for (h, &x) in vars.iter().enumerate() {
        for &j in &tops {
            if bits::is_subset(j, x) {
                continue;
            }
            let cands: Vec<usize> = bits::indices(x & !j)
                .filter_map(|i| index.get(&(j | bits::bit(i))).copied())
                .collect();
            clauses.push(Clause { head: h, cands });
        }
    }
    let m = vars.len();
    let mut by_head = vec![Vec::new(); m];
    let mut by_cand = vec![Vec::new(); m];
    for (ci, cl) in clauses.iter().enumerate() {
        by_head[cl.head].push(ci);
        for &u in &cl.cands {
            by_cand[u].push(ci);
        }
    }
    let mut solver = Solver {
        clauses: &clauses,
        by_head,
        by_cand,
        val: vec![Val::Unset; m],
        trail: Vec::new(),
        nodes: 0,
        budget,
        solutions: Vec::new(),
    };
    for cl in &clauses {
        if cl.cands.is_empty() {
            let ok = solver.assign(cl.head, Val::False);
            debug_assert!(ok);
        }
    }
    let complete = match solver.search() {
        Ok(()) => true,
        Err(Error::Budget { .. }) => false,
        Err(e) => return Err(e),
    };
    let mut extensions = Vec::new();
    for s in &solver.solutions {
        let gens = c.facets().iter().copied().chain(s.iter().map(|&i| vars[i]));
        let e = Complex::new(c.n(), gens.collect::<Vec<_>>())?.with_labels(c.labels().to_vec())?;
        debug_assert!(is_matroid(&e).matroid);
        extensions.push(e);
    }
    Ok(ExtensionSearch { extensions, variables: m, nodes: solver.nodes.min(budget), complete })
}

/// A shelling order with, for each facet after the first, the facets of its
/// intersection with the earlier ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shelling {
    pub order: Vec<Face>,
    pub certificates: Vec<Vec<Face>>,
}

/// A shelling, if one exists.
///
/// Each facet must meet the union of the earlier ones in a pure complex of
/// one dimension less. Orders are searched with facet sizes non-increasing.
pub fn is_shellable(c: &Complex) -> Option<Shelling> {
    let mut facets: Vec<Face> = c.facets().to_vec();
    facets.sort_by_key(|&f| std::cmp::Reverse(bits::card(f)));
    let m = facets.len();
    let words = m.div_ceil(64);
    let mut used = vec![0u64; words];
    let mut order = Vec::with_capacity(m);
    let mut dead: FxHashSet<Vec<u64>> = FxHashSet::default();

    fn fits(f: Face, earlier: &[Face]) -> bool {
        let k = bits::card(f);
        let meets: Vec<Face> = earlier.iter().map(|&g| f & g).collect();
        let big: Vec<Face> = meets.iter().copied().filter(|&x| bits::card(x) + 1 == k).collect();
        !big.is_empty() && meets.iter().all(|&x| big.iter().any(|&b| bits::is_subset(x, b)))
    }

    fn go(
        facets: &[Face],
        used: &mut Vec<u64>,
        order: &mut Vec<Face>,
        dead: &mut FxHashSet<Vec<u64>>,
    ) -> bool {
        let m = facets.len();
        if order.len() == m {
            return true;
        }
        if dead.contains(used) {
            return false;
        }
        let free: Vec<usize> = (0..m).filter(|&i| used[i / 64] >> (i % 64) & 1 == 0).collect();
        let size = bits::card(facets[free[0]]);
        for i in free.into_iter().take_while(|&i| bits::card(facets[i]) == size) {
            if order.is_empty() || fits(facets[i], order) {
                used[i / 64] |= 1 << (i % 64);
                order.push(facets[i]);
                if go(facets, used, order, dead) {
                    return true;
                }
                order.pop();
                used[i / 64] &= !(1 << (i % 64));
            }
        }
        dead.insert(used.clone());
        false
    }

    if words > 0 && !go(&facets, &mut used, &mut order, &mut dead) {
        return None;
    }
    let certificates = (1..order.len())
        .map(|j| {
            let k = bits::card(order[j]);
            let mut big: Vec<Face> = order[..j]
                .iter()
                .map(|&g| order[j] & g)
                .filter(|&x| bits::card(x) + 1 == k)
                .collect();
            big.sort_unstable();
            big.dedup();
            big
        })
        .collect();
    Some(Shelling { order, certificates })
}

/// Flats `F` with `d <= |F| < |V|` of a representable paving complex of
/// dimension `d`.
pub fn lines(c: &Complex) -> Result<Vec<Face>> {
    let d = c
        .is_paving()
        .filter(|_| lattice::is_boolean_representable(c).representable)
        .ok_or_else(|| Error::domain("lines are defined for representable paving complexes"))?;
    let all = c.vertices();
    Ok(lattice::flats(c)
        .iter()
        .filter(|&f| f != all && bits::card(f) >= d)
        .collect())
}

/// `Lμ = {I ∪ {p} : I ∈ P_d(L), p ∉ L}`.
pub fn l_mu(c: &Complex, l: Face) -> Vec<Face> {
    let mut out = Vec::new();
    for i in bits::k_subsets(l, c.dim()) {
        for p in bits::indices(c.vertices() & !l) {
            out.push(i | bits::bit(p));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// `H* = (∪ lines, ∪ P_{<=d}(L))`, on the vertices covered by lines.
pub fn h_star(c: &Complex) -> Result<Complex> {
    let d = c.dim();
    let ls = lines(c)?;
    if ls.is_empty() {
        return Err(Error::domain("the complex has no lines"));
    }
    debug_assert!(ls.iter().tuple_combinations().all(|(&a, &b)| bits::card(a & b) < d));
    debug_assert_eq!(
        {
            let mut f: Vec<Face> = ls.iter().flat_map(|&l| l_mu(c, l)).collect();
            f.sort_unstable();
            f.dedup();
            f
        },
        c.faces_of_size(d + 1)
    );
    let cover = ls.iter().fold(0, |a, &b| a | b);
    let mut gens = Vec::new();
    for &l in &ls {
        gens.extend(bits::k_subsets(l, d.min(bits::card(l))));
    }
    let gens: Vec<Face> = gens.into_iter().map(|g| bits::compress(g, cover)).collect();
    let labels = bits::indices(cover).map(|i| c.labels()[i].clone()).collect();
    Complex::new(bits::card(cover), gens)?.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::from_one_based as s;
    use crate::catalog::{self, Params};
    use crate::operators;

    fn get(name: &str) -> Complex {
        catalog::named(name, &Params::new()).unwrap()
    }

    #[test]
    fn exchange_property_examples() {
        assert!(is_matroid(&Complex::uniform(2, 4).unwrap()).matroid);
        let v = is_matroid(&get("exs"));
        assert!(!v.matroid);
        assert!(v.violation.is_some());
        assert!(is_matroid(&get("desargues")).matroid);
        assert!(is_matroid(&get("non-desargues")).matroid);
        assert!(is_matroid(&operators::up(&Complex::uniform(2, 4).unwrap())).matroid);
    }

    #[test]
    fn near_matroids() {
        assert!(is_near_matroid(&get("far")));
        assert!(!lattice::is_boolean_representable(&get("far")).representable);
        assert!(truncation_is_brsc_for_near_matroid(&get("far"), 2).is_err());
        let b = operators::b_d(6, s(&[1, 2, 3, 4]), 2).unwrap();
        assert!(is_near_matroid(&b));
        let r = rho(&get("desargues")).unwrap();
        assert_eq!(r[&0], 0);
        assert_eq!(r.values().max(), Some(&2));
        for k in 1..=3 {
            assert!(truncation_is_brsc_for_near_matroid(&b, k).unwrap().holds(), "k = {k}");
        }
        assert!(truncation_is_brsc_for_near_matroid(&get("desargues"), 2).unwrap().holds());
        let u = Complex::uniform(4, 6).unwrap();
        assert!(truncation_is_brsc_for_near_matroid(&u, 3).unwrap().holds());
        let (k5, _) = matroid_extension_candidate(&get("desargues")).unwrap();
        assert!(truncation_is_brsc_for_near_matroid(&k5, 3).unwrap().holds());
    }

    #[test]
    fn extension_verdicts() {
        let (j, v) = matroid_extension_candidate(&get("desargues")).unwrap();
        assert_eq!(v, ExtensionVerdict::UniqueExtension);
        assert_eq!(j.dim(), 3);
        assert_eq!(j.facets().len(), 125);
        let (_, v) = matroid_extension_candidate(&get("triang")).unwrap();
        assert_eq!(v, ExtensionVerdict::NoExtension);
        let (j, v) = matroid_extension_candidate(&get("sme")).unwrap();
        assert_eq!(v, ExtensionVerdict::Inconclusive);
        assert_eq!(j.dim(), 4);
        assert!(is_matroid(&j).matroid);
        assert!(matroid_extension_candidate(&get("exs")).is_err());
    }

    #[test]
    fn extension_search_on_one_missing_triangle() {
        let sme = get("sme");
        let r = search_matroid_extensions(&sme, 1_000_000).unwrap();
        assert!(r.complete);
        let q: Vec<Face> = bits::p_k(6, 4)
            .into_iter()
            .filter(|&x| !bits::is_subset(s(&[4, 5, 6]), x))
            .collect();
        for k in 4..=6 {
            let qk: Vec<Face> = q.iter().copied().filter(|&x| x != s(&[1, 2, 3, k])).collect();
            let want = Complex::new(6, qk.into_iter().chain(sme.facets().iter().copied())).unwrap();
            assert!(r.extensions.contains(&want), "Q_{k}");
        }
    }

    #[test]
    fn extension_search_matches_brute_force() {
        for c in [get("sme"), get("triang"), catalog::six(2).unwrap()] {
            if !is_matroid(&c).matroid {
                continue;
            }
            let r = search_matroid_extensions(&c, 1_000_000).unwrap();
            let d = c.dim();
            let vars: Vec<Face> = bits::p_k(c.n(), d + 2)
                .into_iter()
                .filter(|&x| bits::k_subsets(x, d + 1).iter().all(|&y| c.is_face(y)))
                .collect();
            assert_eq!(vars.len(), r.variables);
            let mut want = Vec::new();
            for mask in 1u32..1 << vars.len() {
                let extra = bits::indices(mask as Face).map(|i| vars[i]);
                let e = Complex::new(c.n(), c.facets().iter().copied().chain(extra)).unwrap();
                if is_matroid(&e).matroid {
                    want.push(e);
                }
            }
            let mut got = r.extensions.clone();
            got.sort_by(|a, b| a.facets().cmp(b.facets()));
            want.sort_by(|a, b| a.facets().cmp(b.facets()));
            assert_eq!(got, want);
        }
    }

    #[test]
    fn extension_search_on_graphs() {
        let part = |sizes: &[usize]| {
            let mut block = Vec::new();
            for (b, &m) in sizes.iter().enumerate() {
                block.extend(std::iter::repeat_n(b, m));
            }
            let n = block.len();
            let edges = (0..n)
                .tuple_combinations()
                .filter(|&(i, j)| block[i] != block[j])
                .map(|(i, j)| bits::bit(i) | bits::bit(j));
            Complex::new(n, edges).unwrap()
        };
        let bip = part(&[2, 3]);
        assert!(is_matroid(&bip).matroid);
        assert!(search_matroid_extensions(&bip, 1000).unwrap().extensions.is_empty());
        let tri = part(&[2, 2, 2]);
        assert!(is_matroid(&tri).matroid);
        assert!(!search_matroid_extensions(&tri, 100_000).unwrap().extensions.is_empty());
        let tiny = search_matroid_extensions(&get("sme"), 1).unwrap();
        assert!(!tiny.complete);
    }

    #[test]
    fn shellability_examples() {
        assert!(is_shellable(&get("exs")).is_none());
        let up = get("exs-up");
        let sh = is_shellable(&up).unwrap();
        let want: Vec<Face> =
            [[1, 2, 3, 4], [1, 2, 3, 5], [1, 3, 4, 5], [2, 3, 4, 5]].iter().map(|x| s(x)).collect();
        assert_eq!(sh.order.len(), 4);
        assert!(want.iter().all(|f| sh.order.contains(f)));
        assert_eq!(sh.certificates.len(), 3);
        assert!(is_shellable(&Complex::uniform(2, 5).unwrap()).is_some());
        let two_edges = Complex::new(4, [s(&[1, 2]), s(&[3, 4])]).unwrap();
        assert!(is_shellable(&two_edges).is_none());
    }

    #[test]
    fn lines_and_star_of_boom_and_tracks() {
        let boom = get("boom");
        assert_eq!(
            lines(&boom).unwrap(),
            vec![s(&[1, 2, 3]), s(&[2, 3, 4]), s(&[3, 4, 5]), s(&[4, 5, 6])]
        );
        let hs = h_star(&boom).unwrap();
        assert_eq!(hs.facets().len(), 4);
        assert!(is_shellable(&hs).is_some());
        assert!(is_shellable(&boom).is_none());
        let tracks = get("tracks");
        assert!(is_shellable(&tracks).is_some());
        assert!(is_shellable(&h_star(&tracks).unwrap()).is_none());
        let l = s(&[1, 2, 3]);
        assert_eq!(l_mu(&boom, l), vec![s(&[1, 2, 3, 4]), s(&[1, 2, 3, 5]), s(&[1, 2, 3, 6])]);
    }

    #[test]
    fn pure_part_of_truncations() {
        let r = check_pure_conjecture(&get("cepc"), 3).unwrap();
        assert!(!r.pure_k_is_brsc);
        let r = check_pure_conjecture(&get("bfour"), 3).unwrap();
        assert!(r.pure_k_is_tbrsc && !r.pure_k_is_brsc);
        let r = check_pure_conjecture(&get("cepct"), 4).unwrap();
        assert!(!r.pure_k_is_tbrsc);
        let r = check_pure_conjecture(&get("desargues"), 2).unwrap();
        assert!(r.pure_k_is_brsc);
        assert!(check_pure_conjecture(&get("far"), 2).is_err());
    }
}
