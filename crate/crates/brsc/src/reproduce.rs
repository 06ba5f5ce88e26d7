//! Named reproduction runs. Each section executes a batch of exact checks
//! and reports one line per check. The acceptance suite and the `reproduce`
//! command both read [`sections`].

use std::fmt::Debug;

use itertools::Itertools;
use rand::Rng;
use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::bits::{self, from_one_based as s, Face};
use crate::catalog::{self, GroupTable, Params};
use crate::complex::{self, Complex};
use crate::error::{Error, Result};
use crate::lattice::{self, BooleanMatrix};
use crate::paving::{self, PavingSpace};
use crate::{iso, matroid, operators, random, t_operator};

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Knobs shared by all sections.
#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    /// Vertex count for sections that take one.
    pub n: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 20_240_917, n: None }
    }
}

/// One runnable section.
pub struct Section {
    pub tag: &'static str,
    /// Position in the acceptance list, when the section is one of its criteria.
    pub criterion: Option<usize>,
    pub title: &'static str,
    pub run: fn(&Options) -> Result<Vec<Check>>,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    fn eq<T: PartialEq + Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let pass = got == want;
        let detail = if pass { clip(format!("{got:?}")) } else { format!("got {got:?}, want {want:?}") };
        self.push(name, pass, detail);
    }

    fn ok(&mut self, name: impl Into<String>, pass: bool) {
        self.push(name, pass, String::new());
    }

    /// Records a randomized batch: `failures` out of `trials`.
    fn batch(&mut self, name: impl Into<String>, trials: usize, failures: usize) {
        self.push(name, failures == 0, format!("{failures} failures in {trials} trials"));
    }

    fn done(self) -> Result<Vec<Check>> {
        Ok(self.0)
    }
}

fn clip(mut s: String) -> String {
    if s.chars().count() > 72 {
        s = s.chars().take(69).collect::<String>() + "...";
    }
    s
}

fn get(name: &str) -> Result<Complex> {
    catalog::named(name, &Params::new())
}

fn sorted(mut v: Vec<Face>) -> Vec<Face> {
    v.sort_unstable();
    v.dedup();
    v
}

fn at_most(n: usize, k: usize) -> Vec<Face> {
    (0..=k).flat_map(|i| bits::p_k(n, i)).collect()
}

fn iterate_up(c: &Complex, m: usize) -> Complex {
    (0..m).fold(c.clone(), |h, _| operators::up(&h))
}

fn up_operator(o: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    let cfup = get("cfup")?;
    let up = operators::up(&cfup);
    let mut want = at_most(4, 2);
    want.push(bits::full(4));
    out.eq("flats of the up complex of cfup", lattice::flats(&up).members().to_vec(), sorted(want));

    let mut g = random::rng(o.seed);
    let mut bad = 0;
    for _ in 0..1000 {
        let n = g.random_range(1..=7);
        let c = random::complex(&mut g, n, 6)?;
        let mut rows = c.faces();
        rows.push(c.vertices());
        let m = BooleanMatrix::from_zero_sets(n, rows);
        let up = operators::up(&c);
        if lattice::complex_of_matrix(&m)? != up || operators::up_by_complement(&c) != up {
            bad += 1;
        }
    }
    out.batch("matrix of H plus V represents the up complex", 1000, bad);

    let mut bad = 0;
    let mut trials = 0;
    for _ in 0..300 {
        let d = g.random_range(1..=3);
        let n = g.random_range(d + 2..=8);
        let p = g.random_range(0.1..0.9);
        let c = random::paving(&mut g, n, d, p)?;
        for m in 1..=3 {
            trials += 1;
            if operators::up_iter_paving(&c, m)? != iterate_up(&c, m) {
                bad += 1;
            }
        }
    }
    out.batch("closed form of iterated up on paving complexes", trials, bad);
    out.done()
}

/// `α` of `J(n,m,3)^up` from binomial counts.
fn up_alpha(n: u64, m: u64) -> Vec<u64> {
    let b = |a, k| bits::binom(a as usize, k);
    let mut a = vec![1, n, b(n, 2), b(m, 3) + b(m, 2) * (n - m), b(m, 4) + b(m, 3) * (n - m)];
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rota_example(out: &mut Checks) -> Result<()> {
    let j = catalog::j_nmk(16, 6, 3)?;
    let cf = j.counting_function();
    out.eq("counting function of J(16,6,3)", cf.alpha, vec![1, 16, 15, 20]);
    out.eq("J(16,6,3) unimodal", cf.unimodal, false);
    Ok(())
}

fn unimodality(_: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    rota_example(&mut out)?;
    let up = operators::up(&catalog::j_nmk(26, 6, 3)?);
    let cf = up.counting_function();
    out.eq("alpha_2 of J(26,6,3)^up", cf.alpha[2], 325);
    out.ok("alpha_2 > alpha_3 for J(26,6,3)^up", cf.alpha[2] > cf.alpha[3]);
    out.eq("J(26,6,3)^up unimodal", cf.unimodal, false);

    let mut mismatch = Vec::new();
    for n in 4..=12u64 {
        for m in 3..n {
            let a = operators::up(&catalog::j_nmk(n as usize, m as usize, 3)?).counting_function();
            if a.alpha != up_alpha(n, m) {
                mismatch.push((n, m));
            }
        }
    }
    for (n, m) in [(16, 6), (25, 6), (26, 6), (26, 7)] {
        let a = operators::up(&catalog::j_nmk(n as usize, m as usize, 3)?).counting_function();
        if a.alpha != up_alpha(n, m) {
            mismatch.push((n, m));
        }
    }
    out.eq("binomial counts match the complexes", mismatch, vec![]);

    let bad: Vec<(u64, u64)> = (4..=60u64)
        .flat_map(|n| (3..n).map(move |m| (n, m)))
        .filter(|&(n, m)| !complex::is_unimodal(&up_alpha(n, m)))
        .collect();
    let least = bad.iter().map(|p| p.0).min();
    out.eq("least n with a non-unimodal J(n,m,3)^up", least, Some(26));
    let at: Vec<u64> = bad.iter().filter(|p| Some(p.0) == least).map(|p| p.1).collect();
    out.eq("values of m at that n", at, vec![6]);
    out.done()
}

fn paving_flats(o: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    let mut g = random::rng(o.seed ^ 3);
    let mut bad = 0;
    for _ in 0..2000 {
        let d = g.random_range(2..=3);
        let n = g.random_range(d + 2..=9);
        let p = g.random_range(0.05..0.6);
        let c = random::paving(&mut g, n, d, p)?;
        if lattice::paving_flats(&c)?.members() != lattice::flats(&c).members() {
            bad += 1;
        }
    }
    out.batch("flats from long hyperplanes equal closure flats", 2000, bad);
    let lhne = get("lhne")?;
    let p = lattice::long_hyperplane_partition(&lhne)?;
    let f = |xs: &[usize]| bits::from_indices(xs);
    out.eq("isolated flat hyperplanes of lhne", p.isolated_flats, vec![f(&[1, 2, 3])]);
    out.eq("isolated non-flat hyperplanes of lhne", p.isolated_nonflats, vec![f(&[3, 4, 5])]);
    out.eq(
        "overlapping hyperplanes of lhne",
        sorted(p.overlapping),
        sorted(vec![f(&[7, 8, 9]), f(&[8, 9, 0])]),
    );
    out.done()
}

fn random_tbpav2(g: &mut random::Rng64) -> Result<Complex> {
    loop {
        let n = g.random_range(5..=7);
        let mut c = Complex::new(n, bits::p_k(n, 2))?;
        for _ in 0..g.random_range(1..=3) {
            let size = g.random_range(2..n);
            let l = bits::from_indices(&random::permutation(g, n)[..size]);
            c = c.union(&operators::b_d(n, l, 2)?)?;
        }
        if c.is_paving() == Some(2) && t_operator::is_tbrsc(&c) {
            return Ok(c);
        }
    }
}

fn truncation(o: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    let mut scanned = 0u64;
    let mut gap = 0u64;
    for n in 3..=5 {
        for d in 1..=n - 2 {
            let sp = PavingSpace::new(n, d)?;
            let all = sp.all_tops();
            scanned += (1u64 << sp.tops().len()) - 1;
            gap += sp.defects()?.filter(|&def| def != all && sp.is_tbrsc(def) && !sp.is_br(def)).count() as u64;
        }
    }
    out.push("truncation-representable but not representable, n <= 5", gap == 0, format!("{gap} of {scanned} paving complexes"));

    let classes = iso::enumerate_up_to_iso(6, 2, |sp, def| sp.is_tbrsc(def) && !sp.is_br(def))?;
    out.eq("six-point classes", classes.len(), 5);
    let cases: Vec<Complex> = (1..=5).map(catalog::six).collect::<Result<_>>()?;
    let matched: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| (1..=5).filter(|&i| iso::are_isomorphic(&c.complex, &cases[i - 1]).is_some()).collect())
        .collect();
    let mut flat: Vec<usize> = matched.iter().flatten().copied().collect();
    flat.sort_unstable();
    out.eq("each class matches one listed case", flat, vec![1, 2, 3, 4, 5]);

    let mut g = random::rng(o.seed ^ 4);
    let mut bad = 0;
    for _ in 0..500 {
        let a = random_tbpav2(&mut g)?;
        let b = loop {
            let b = random_tbpav2(&mut g)?;
            if b.n() == a.n() {
                break b;
            }
        };
        let u = a.union(&b)?;
        if u.is_paving() != Some(2) || !t_operator::is_tbrsc(&u) {
            bad += 1;
        }
    }
    out.batch("union of truncation-representable paving pairs", 500, bad);

    let u = get("ncu-h1")?.union(&get("ncu-h2")?)?;
    out.eq("ncu union representable", lattice::is_boolean_representable(&u).representable, false);
    out.eq("ncu union truncation-representable", t_operator::is_tbrsc(&u), true);
    out.done()
}

fn finite_basis(_: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    let c = catalog::nfb(6)?;
    out.eq("vertices", c.n(), 15);
    out.eq("paving dimension", c.is_paving(), Some(2));
    out.eq("truncation-representable", t_operator::is_tbrsc(&c), false);
    let bad: Vec<String> = (0..c.n())
        .filter_map(|p| {
            let r = c.restriction(c.vertices() & !bits::bit(p)).ok()?;
            (!t_operator::is_tbrsc(&r)).then(|| c.labels()[p].clone())
        })
        .collect();
    out.eq("one-vertex restrictions that fail", bad, vec![]);
    out.done()
}

fn pure_part(o: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    let cepc = get("cepc")?;
    out.eq("cepc representable", lattice::is_boolean_representable(&cepc).representable, true);
    let r = matroid::check_pure_conjecture(&cepc, 3)?;
    out.eq("cepc pure(H_3) representable", r.pure_k_is_brsc, false);

    let (m, labels) = catalog::bfour_matrix();
    let b4 = catalog::bfour()?;
    out.eq("B4 pure", b4.is_pure(), true);
    let b3 = b4.truncate(3)?;
    out.eq("B4_3 truncation-representable", t_operator::is_tbrsc(&b3), true);
    out.eq("B4_3 representable", lattice::is_boolean_representable(&b3).representable, false);
    let col = |name: char| -> usize {
        let v = match name {
            'a' => "1000",
            'b' => "1110",
            'c' => "1101",
            'd' => "0110",
            'e' => "1010",
            'f' => "0011",
            _ => "1011",
        };
        labels.iter().position(|l| l == v).expect("column present")
    };
    let set = |w: &str| w.chars().fold(0, |a, ch| a | bits::bit(col(ch)));
    for (w, indep) in [
        ("abc", true),
        ("abd", false),
        ("bde", false),
        ("abe", true),
        ("bcf", false),
        ("bcg", false),
        ("bfg", true),
    ] {
        out.eq(format!("B4 column set {w} independent"), m.is_independent(set(w)).is_some(), indep);
    }
    for w in ["ab", "ac", "bc"] {
        out.eq(format!("closure of {w} in B4_3 is everything"), lattice::closure(&b3, set(w)), b3.vertices());
    }

    let cepct = get("cepct")?;
    let r = matroid::check_pure_conjecture(&cepct, 4)?;
    out.eq("cepct pure part truncation-representable", r.pure_k_is_tbrsc, false);
    let p = cepct.pure_part();
    let block = s(&[3, 4, 5, 6]);
    for y in bits::k_subsets(block, 3) {
        let cl = t_operator::cl_t(&p, y);
        out.ok(format!("T-closure of {} contains 3456", p.show(y)), bits::is_subset(block, cl));
    }

    let mut g = random::rng(o.seed ^ 6);
    let mut bad = 0;
    for _ in 0..200 {
        let n = g.random_range(3..=7);
        let c = random::brsc(&mut g, n)?;
        if !matroid::check_pure_conjecture(&c, 3)?.pure_k_is_tbrsc {
            bad += 1;
        }
    }
    out.batch("pure(H_3) truncation-representable for random representable H", 200, bad);
    out.done()
}

type SumKey = (usize, usize, usize);

fn sum_verdict(n: usize, l: Face, m: Face) -> Result<(bool, bool)> {
    let c = operators::b_d(n, l, 2)?.sum(&operators::b_d(n, m, 2)?)?;
    Ok((lattice::is_boolean_representable(&c).representable, t_operator::is_tbrsc(&c)))
}

fn sums(o: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    let mut g = random::rng(o.seed ^ 7);
    for n in [7, 8] {
        let all = bits::full(n);
        let ls: Vec<Face> = (2..n).flat_map(|k| bits::p_k(n, k)).collect();
        let mut memo: FxHashMap<SumKey, (bool, bool)> = FxHashMap::default();
        let mut wrong = 0;
        for &l in &ls {
            for &m in &ls {
                let key = (bits::card(l & m), bits::card(l & !m), bits::card(m & !l));
                let v = match memo.get(&key) {
                    Some(&v) => v,
                    None => {
                        let v = sum_verdict(n, l, m)?;
                        memo.insert(key, v);
                        v
                    }
                };
                let predicted = key.1 <= 3 || key.2 <= 3;
                if v != (predicted, predicted) {
                    wrong += 1;
                }
            }
        }
        out.batch(format!("sum of two B2 complexes on {n} points"), ls.len() * ls.len(), wrong);
        let mut spot = 0;
        for _ in 0..100 {
            let l = ls[g.random_range(0..ls.len())];
            let m = ls[g.random_range(0..ls.len())];
            let key = (bits::card(l & m), bits::card(l & !m), bits::card(m & !l));
            if sum_verdict(n, l, m)? != memo[&key] {
                spot += 1;
            }
        }
        out.batch(format!("orbit memo agrees with direct checks on {n} points"), 100, spot);
        let mut bad: Vec<Complex> = Vec::new();
        for (&(a, b, c), &(br, _)) in memo.iter().sorted() {
            if br {
                continue;
            }
            let l = bits::full(a + b);
            let m = (bits::full(a + b + c) & !bits::full(a + b)) | bits::full(a);
            debug_assert!(m & !all == 0);
            let cx = operators::b_d(n, l, 2)?.sum(&operators::b_d(n, m, 2)?)?;
            if !bad.iter().any(|x| iso::are_isomorphic(x, &cx).is_some()) {
                bad.push(cx);
            }
        }
        out.eq(format!("non-representable classes on {n} points"), bad.len(), if n == 7 { 0 } else { 1 });
    }
    out.done()
}

/// Restricted growth strings of length `n`.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(p: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if p.len() == n {
            out.push(p.clone());
            return;
        }
        let top = p.iter().max().map_or(0, |&m| m + 1);
        for b in 0..=top {
            p.push(b);
            go(p, n, out);
            p.pop();
        }
    }
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Endpoints of the edge labelled `ab`, counted from 0.
fn edge_ends(label: &str) -> (usize, usize) {
    let mut it = label.chars().map(|c| c.to_digit(10).expect("digit label") as usize - 1);
    (it.next().expect("two digits"), it.next().expect("two digits"))
}

fn extensions(_: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    let d = catalog::desargues()?;
    let ends: Vec<(usize, usize)> = d.labels().iter().map(|l| edge_ends(l)).collect();
    let edge_set = |keep: &dyn Fn(usize, usize) -> bool| {
        ends.iter().enumerate().filter(|(_, &(a, b))| keep(a, b)).fold(0, |m, (i, _)| m | bits::bit(i))
    };
    let mut want: Vec<Face> = vec![0, d.vertices()];
    want.extend((0..10).map(bits::bit));
    for (i, j) in (0..10).tuple_combinations() {
        let (a, b) = ends[i];
        let (c, e) = ends[j];
        if a != c && a != e && b != c && b != e {
            want.push(bits::bit(i) | bits::bit(j));
        }
    }
    for t in (0..5).combinations(3) {
        want.push(edge_set(&|a, b| t.contains(&a) && t.contains(&b)));
    }
    let fl = lattice::flats(&d);
    out.eq("Desargues flats", fl.members().to_vec(), sorted(want));
    out.eq("number of Desargues flats", fl.len(), 37);

    let t = t_operator::t_family(&d);
    let parts: Vec<Face> = set_partitions(5).iter().map(|p| edge_set(&|a, b| p[a] == p[b])).collect();
    out.eq("T(D) size", t.len(), 52);
    out.eq("T(D) is the partition lattice", t.members().to_vec(), sorted(parts));

    let (j, verdict) = matroid::matroid_extension_candidate(&d)?;
    out.eq("J(T(D)) facets", j.facets().len(), 125);
    let trees = j.facets().iter().all(|&f| {
        let mut uf = petgraph::unionfind::UnionFind::<usize>::new(5);
        bits::card(f) == 4 && bits::indices(f).all(|i| uf.union(ends[i].0, ends[i].1))
    });
    out.ok("J(T(D)) facets are the spanning trees of K5", trees);
    out.eq("Desargues extension verdict", verdict.as_str(), "unique_extension");

    let (_, v) = matroid::matroid_extension_candidate(&get("triang")?)?;
    out.eq("triang extension verdict", v.as_str(), "no_extension");

    let sme = get("sme")?;
    let (j, v) = matroid::matroid_extension_candidate(&sme)?;
    out.eq("sme extension verdict", v.as_str(), "inconclusive");
    out.eq("sme J(T(H)) dimension", j.dim(), 4);
    out.eq("sme J(T(H)) matroid", matroid::is_matroid(&j).matroid, true);
    let r = matroid::search_matroid_extensions(&sme, 100_000_000)?;
    let q: Vec<Face> = bits::p_k(6, 4).into_iter().filter(|&x| !bits::is_subset(s(&[4, 5, 6]), x)).collect();
    for k in 4..=6 {
        let qk = q.iter().copied().filter(|&x| x != s(&[1, 2, 3, k])).chain(sme.facets().iter().copied());
        let want = Complex::new(6, qk)?;
        out.ok(format!("sme extension without 123{k} found"), r.extensions.contains(&want));
    }

    let nd = catalog::non_desargues()?;
    out.eq("non-Desargues matroid", matroid::is_matroid(&nd).matroid, true);
    out.eq("non-Desargues codimension", t_operator::codimension(&nd), 2);
    let r = matroid::search_matroid_extensions(&nd, 100_000_000)?;
    out.push(
        "non-Desargues has no proper matroid extension",
        r.complete && r.extensions.is_empty(),
        format!("{} candidates, {} nodes, complete = {}", r.variables, r.nodes, r.complete),
    );
    out.done()
}

fn gain_graphs(_: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    let z2 = GroupTable::cyclic(2)?;
    let z3 = GroupTable::cyclic(3)?;
    for (name, g, n) in [("Z2", &z2, 3), ("Z2", &z2, 4), ("Z3", &z3, 3)] {
        let h = catalog::rhodes_reduced(g, n)?.complex;
        out.eq(
            format!("Rhodes {name}, n = {n}: flats equal T(H_4)"),
            t_operator::t_family_at(&h, 4)?.members().to_vec(),
            lattice::flats(&h).members().to_vec(),
        );
        out.eq(format!("Rhodes {name}, n = {n} matroid"), matroid::is_matroid(&h).matroid, true);
    }
    let h = catalog::rhodes_reduced(&z2, 3)?.complex;
    let dim = t_operator::dim_jt(&h.truncate(3)?);
    out.push("Rhodes Z2, n = 3: dim J(T(H_3)) >= 3", dim >= 3, format!("dimension {dim}"));
    let h = catalog::rhodes_reduced(&z2, 4)?.complex;
    let j = lattice::transversal_complex(&t_operator::t_family_at(&h, 3)?)?;
    out.push(
        "Rhodes Z2, n = 4: J(T(H_3)) exceeds H",
        j.dim() > h.dim(),
        format!("dim J(T(H_3)) = {}, dim H = {}", j.dim(), h.dim()),
    );
    for (name, g) in [("Z2", &z2), ("Z3", &z3)] {
        let h = catalog::dowling(g, 3)?.complex;
        out.eq(
            format!("Dowling {name}, n = 3: flats equal T(H_3)"),
            t_operator::t_family_at(&h, 3)?.members().to_vec(),
            lattice::flats(&h).members().to_vec(),
        );
        out.eq(format!("Dowling {name}, n = 3 matroid"), matroid::is_matroid(&h).matroid, true);
    }
    out.done()
}

fn shellability(o: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    let sh = |c: &Complex| matroid::is_shellable(c).is_some();
    out.eq("exs shellable", sh(&get("exs")?), false);
    out.eq("exs up shellable", sh(&get("exs-up")?), true);
    let boom = get("boom")?;
    out.eq("boom shellable", sh(&boom), false);
    out.eq("boom H* shellable", sh(&matroid::h_star(&boom)?), true);
    let tracks = get("tracks")?;
    out.eq("tracks shellable", sh(&tracks), true);
    out.eq("tracks H* shellable", sh(&matroid::h_star(&tracks)?), false);

    let mut g = random::rng(o.seed ^ 10);
    let mut premise = 0;
    let mut bad = 0;
    for _ in 0..200 {
        let n = g.random_range(4..=7);
        let c = random::bpav2(&mut g, n)?;
        if sh(&matroid::h_star(&c)?) {
            premise += 1;
            if !sh(&c) {
                bad += 1;
            }
        }
    }
    out.push(
        "H* shellable implies H shellable on random representable paving complexes",
        bad == 0,
        format!("{bad} failures among {premise} shellable H* in 200 trials"),
    );
    out.done()
}

fn mngu_six(out: &mut Checks) -> Result<()> {
    let classes = t_operator::enumerate_mngu(6, 2)?;
    out.eq("six-point maximal non-going-up classes", classes.len(), 10);
    let sp = PavingSpace::new(6, 2)?;
    let group = sp.symmetric_group();
    let found: FxHashSet<_> = classes
        .iter()
        .map(|c| sp.defect_of(c).map(|d| PavingSpace::canonical(d, &group)))
        .collect::<Result<_>>()?;
    let listed: FxHashSet<_> = (1..=10)
        .map(|i| sp.mask_of(&catalog::mngu6_defect(i)?).map(|d| PavingSpace::canonical(d, &group)))
        .collect::<Result<_>>()?;
    out.ok("classes match the ten listed defects", found == listed && listed.len() == 10);
    Ok(())
}

fn mgu_count(out: &mut Checks, n: usize) -> Result<()> {
    let r = t_operator::enumerate_mgu(n)?;
    out.eq(format!("minimal going-up classes on {n} points"), r.members.len(), (n * n + 22 - 9 * n) / 2);
    out.ok(format!("all J(i,j,{n}) minimal going up"), r.all_minimal_going_up);
    out.ok(format!("J(i,j,{n}) pairwise non-isomorphic"), r.pairwise_non_isomorphic);
    if let Some(k) = r.exhaustive_count {
        out.eq(format!("exhaustive class count on {n} points"), k, r.members.len());
    }
    Ok(())
}

fn going_up(o: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    out.eq("four-point maximal non-going-up classes", t_operator::enumerate_mngu(4, 2)?.len(), 1);
    out.eq("five-point maximal non-going-up classes", t_operator::enumerate_mngu(5, 2)?.len(), 2);
    mngu_six(&mut out)?;

    let mut g = random::rng(o.seed ^ 11);
    let mut graphs = 0u64;
    let mut bad = 0u64;
    for n in 2..=7 {
        let sp = PavingSpace::new(n, 1)?;
        let table = sp.gu_table()?;
        let gu = |m| paving::table_bit(&table, m);
        let all = sp.all_tops();
        for def in 0..all {
            graphs += 1;
            let (comp, forest, cliques) = t_operator::graph_shape(n, &sp.faces_of(def));
            let direct = (gu(def), t_operator::classify_in_space(&sp, def, gu));
            if t_operator::dim1_prediction(comp, forest, cliques) != direct {
                bad += 1;
            }
        }
        for _ in 0..50 {
            let def = g.random_range(0..all);
            if t_operator::goes_up(&sp.complex(def)?).goes_up != gu(def) {
                bad += 1;
            }
        }
    }
    out.push("graph description of going up in dimension 1", bad == 0, format!("{bad} mismatches over {graphs} graphs"));

    for n in 4..=9 {
        mgu_count(&mut out, n)?;
    }
    let mut brj = Vec::new();
    for n in 4..=9 {
        for (i, j) in t_operator::q_pairs(n) {
            let c = catalog::j_ij(i, j, n)?;
            let br = lattice::is_boolean_representable(&c).representable;
            if !t_operator::is_tbrsc(&c) || br != (j == 3) {
                brj.push((i, j, n));
            }
        }
    }
    out.eq("J(i,j,n) truncation-representable, representable iff j = 3", brj, vec![]);

    for n in [9, 10] {
        let mut every = Vec::new();
        for (i, j) in t_operator::q_pairs(n) {
            if t_operator::every_restriction_mgu(&catalog::j_ij(i, j, n)?)? {
                every.push((i, j));
            }
        }
        let predicted: Vec<(usize, usize)> = t_operator::q_pairs(n)
            .into_iter()
            .filter(|&(i, j)| 3 <= i && i + 3 <= j && j + 3 <= n)
            .collect();
        out.eq(format!("members on {n} points with every restriction minimal"), every.len(), (n * n + 56 - 15 * n) / 2);
        out.eq(format!("which members on {n} points"), every, predicted);
    }
    let mut none = Vec::new();
    for n in 5..=9 {
        for (i, j) in t_operator::q_pairs(n) {
            if t_operator::some_restriction_mgu(&catalog::j_ij(i, j, n)?)?.is_none() {
                none.push((i, j, n));
            }
        }
    }
    out.eq("members without a minimal one-point restriction", none, vec![]);
    out.done()
}

fn oracles(o: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    let mut g = random::rng(o.seed ^ 12);
    let mut bad = 0;
    for _ in 0..2000 {
        let n = g.random_range(1..=6);
        let r = random::moore_family(&mut g, n);
        if lattice::transversal_complex(&r)? != lattice::complex_of_matrix(&lattice::matrix_of(&r))? {
            bad += 1;
        }
    }
    out.batch("transversal complex equals the complex of its matrix", 2000, bad);

    let mut bad = 0;
    for _ in 0..500 {
        let n = g.random_range(1..=8);
        let c = random::complex(&mut g, n, 6)?;
        for _ in 0..5 {
            let x = random::subset(&mut g, c.vertices(), 0.3);
            let y = x | random::subset(&mut g, c.vertices(), 0.3);
            let (cx, cy) = (lattice::closure(&c, x), lattice::closure(&c, y));
            if !bits::is_subset(x, cx) || !bits::is_subset(cx, cy) || lattice::closure(&c, cx) != cx {
                bad += 1;
            }
        }
    }
    out.batch("closure is extensive, monotone and idempotent", 2500, bad);

    let mut bad_br = 0;
    let mut bad_up = 0;
    for _ in 0..1000 {
        let n = g.random_range(1..=7);
        let m = random::matroid(&mut g, n)?;
        if !lattice::is_boolean_representable(&m).representable {
            bad_br += 1;
        }
        if !matroid::is_matroid(&operators::up(&m)).matroid {
            bad_up += 1;
        }
    }
    out.batch("random matroids are representable", 1000, bad_br);
    out.batch("up of a random matroid is a matroid", 1000, bad_up);
    out.done()
}

fn mngu6(_: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    mngu_six(&mut out)?;
    out.done()
}

fn computemgu(o: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    mgu_count(&mut out, o.n.unwrap_or(7))?;
    out.done()
}

fn rota_cex(_: &Options) -> Result<Vec<Check>> {
    let mut out = Checks::default();
    rota_example(&mut out)?;
    out.done()
}

static SECTIONS: &[Section] = &[
    Section { tag: "up", criterion: Some(1), title: "up operator", run: up_operator },
    Section { tag: "unimodality", criterion: Some(2), title: "counting functions", run: unimodality },
    Section { tag: "paving-flats", criterion: Some(3), title: "flats of paving complexes", run: paving_flats },
    Section { tag: "truncation", criterion: Some(4), title: "truncation representability", run: truncation },
    Section { tag: "finite-basis", criterion: Some(5), title: "a family with no finite basis", run: finite_basis },
    Section { tag: "pure", criterion: Some(6), title: "pure parts of truncations", run: pure_part },
    Section { tag: "sums", criterion: Some(7), title: "sums of B2 complexes", run: sums },
    Section { tag: "extensions", criterion: Some(8), title: "Desargues and matroid extensions", run: extensions },
    Section { tag: "gain-graphs", criterion: Some(9), title: "Rhodes and Dowling matroids", run: gain_graphs },
    Section { tag: "shellability", criterion: Some(10), title: "shellability", run: shellability },
    Section { tag: "going-up", criterion: Some(11), title: "going up", run: going_up },
    Section { tag: "oracles", criterion: Some(12), title: "cross-module oracles", run: oracles },
    Section { tag: "mngu6", criterion: None, title: "six-point maximal non-going-up classes", run: mngu6 },
    Section { tag: "computemgu", criterion: None, title: "minimal going-up count for one n", run: computemgu },
    Section { tag: "rota-cex", criterion: None, title: "non-unimodal counting function", run: rota_cex },
];

pub fn sections() -> &'static [Section] {
    SECTIONS
}

/// The section with `tag`, or a domain error listing the known tags.
pub fn find(tag: &str) -> Result<&'static Section> {
    SECTIONS.iter().find(|s| s.tag == tag).ok_or_else(|| {
        Error::domain(format!(
            "unknown section {tag:?}; known: {}",
            SECTIONS.iter().map(|s| s.tag).join(", ")
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criteria_are_numbered_once() {
        let nums: Vec<usize> = sections().iter().filter_map(|s| s.criterion).collect();
        assert_eq!(nums, (1..=12).collect::<Vec<_>>());
        assert!(find("nope").is_err());
        let tags: FxHashSet<&str> = sections().iter().map(|s| s.tag).collect();
        assert_eq!(tags.len(), sections().len());
    }

    #[test]
    fn small_sections_pass() {
        // The n = 3 Rhodes bound is expected to fail; n = 4 carries it.
        let known = "Rhodes Z2, n = 3: dim J(T(H_3)) >= 3";
        for tag in ["rota-cex", "mngu6", "finite-basis", "gain-graphs"] {
            for c in (find(tag).unwrap().run)(&Options::default()).unwrap() {
                assert_eq!(c.pass, c.name != known, "{tag}: {} {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn partitions_of_five() {
        assert_eq!(set_partitions(5).len(), 52);
        assert_eq!(up_alpha(26, 6), vec![1, 26, 325, 320, 415]);
    }
}
