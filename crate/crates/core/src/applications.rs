//! Double cosets of parabolic subgroups, intersections of parabolic
//! subgroups, ribbon isomorphisms and conjugacy of parabolic elements.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use crate::braid::{EqualityOptions, Verdict};
use crate::coxeter::{CoxeterSystem, Gen, GenSet, WElement};
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Whether the canonical representative of a double coset is the only
/// element `b` of the coset with `π_I(b) = πʳ_J(b) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Uniqueness {
    Unique,
    /// Another element of the coset with trivial retractions on both sides.
    NotUnique { other: Word },
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    /// `tʳ_J(t_I(b))`.
    pub b0: Word,
    /// `t_I(tʳ_J(b))`, which in general differs from `b0`.
    pub b0_other_order: Word,
    pub orders_agree: Verdict,
    /// `pr(b0)`, which is `I`-reduced-`J`.
    pub w: WElement,
    pub i1: GenSet,
    pub j1: GenSet,
    /// Pairs `(j, φ_w(j))` for `j ∈ J1`.
    pub pairs: Vec<(Gen, Gen)>,
    pub retract_left_trivial: Verdict,
    pub retract_right_trivial: Verdict,
    /// `πʳ_J(b) = φ⁻¹(πʳ_{I1}(π_I(b)))·πʳ_J(t_I(b))`.
    pub decomposition: Verdict,
    pub uniqueness: Uniqueness,
}

/// The reduction of `ᵇB_J ∩ B_I` to a centraliser:
/// `ᵇB_J ∩ B_I = ᶜC_{B_{I1}}(p)` with `c = π_I(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionReduction {
    pub conjugator: Word,
    pub b0: Word,
    pub i1: GenSet,
    pub j1: GenSet,
    pub ribbon: WElement,
    pub pure: Word,
    /// The ambient may be further shrunk to a minimal parabolic subgroup.
    pub i1_finite: bool,
    pub checks: Vec<(String, Verdict)>,
}

/// A bijection `φ : J → I` induced by an `I`-ribbon-`J`, as pairs `(j, φ(j))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RibbonIso {
    pub map: Vec<(Gen, Gen)>,
    pub witness: WElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonGraph {
    /// Vertices `(I′, φ : I′ → I)`.
    pub vertices: Vec<(GenSet, Vec<(Gen, Gen)>)>,
    /// Edges `(from, to, elementary ribbon)`.
    pub edges: Vec<(usize, usize, WElement)>,
}

/// Conjugates of an element of `B_I` under `B_I` with the fewest letters,
/// one word per element, each with `g` such that `g⁻¹ i g` is the form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalConjugates {
    pub length: usize,
    pub forms: Vec<(Word, Word)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyVerdict {
    /// `g⁻¹ i g = j`; `verified` is the equality check of that identity.
    Conjugate { conjugator: Word, verified: Verdict },
    NotConjugate { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyReport {
    pub verdict: ConjugacyVerdict,
    pub minimal_i: MinimalConjugates,
    pub minimal_j: MinimalConjugates,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalParabolic {
    pub support: GenSet,
    /// `c` with `c⁻¹ b c` in `B_support` of minimal length, so that
    /// `c B_support c⁻¹` is a minimal parabolic subgroup containing `b`.
    pub conjugator: Word,
    pub form: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjectureVerdict {
    Supporting,
    Refuting,
    Unknown,
    HypothesesNotMet(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub verdict: ConjectureVerdict,
    pub support: GenSet,
    pub checks: Vec<(String, Verdict)>,
}

/// Cap on the number of words the minimal-conjugate search may visit.
pub const MAX_CONJUGATE_WORDS: usize = 2_000_000;

fn verdict(b: bool) -> Verdict {
    if b {
        Verdict::Equal
    } else {
        Verdict::Distinct
    }
}

impl CoxeterSystem {
    /// Equality of two words, inside `B_K` when `K` has a local oracle.
    pub fn equal_in(&self, k: GenSet, a: &Word, b: &Word, opts: EqualityOptions) -> Verdict {
        let inside = a.alphabet().union(b.alphabet()).is_subset(k);
        if inside && self.has_local_oracle(k) {
            return verdict(self.local_equal(k, a, b).expect("alphabet checked"));
        }
        self.braid_equal(a, b, opts).verdict
    }

    fn positive_equal(&self, a: &Word, b: &Word) -> Verdict {
        match (self.positive_from_word(a), self.positive_from_word(b)) {
            (Ok(x), Ok(y)) => verdict(x == y),
            _ => Verdict::Unknown,
        }
    }

    /// Canonical representative of `B_I b B_J` and the data attached to it.
    pub fn double_coset(&self, i: GenSet, j: GenSet, b: &Word, opts: EqualityOptions) -> Result<DoubleCoset> {
        let ti = self.tail(i, b);
        let b0 = self.tail_right(j, &ti);
        let other = self.tail(i, &self.tail_right(j, b));
        let orders_agree = self.braid_equal(&b0, &other, opts).verdict;
        let w = self.project(&b0);
        let j1 = self.solomon_intersection(i, j, &w)?;
        let pairs: Vec<(Gen, Gen)> = j1
            .iter()
            .map(|s| {
                let c = self.conjugate_generator(&w, s);
                (s, c.word()[0])
            })
            .collect();
        let i1: GenSet = pairs.iter().map(|p| p.1).collect();
        let retract_left_trivial = self.equal_in(i, &self.retract_braid(i, &b0), &Word::empty(), opts);
        let retract_right_trivial = self.equal_in(j, &self.retract_right(j, &b0), &Word::empty(), opts);

        let w_inv = self.inverse(&w);
        let inner = self.retract_right(i1, &self.retract_braid(i, b));
        let rhs = self.apply_ribbon(&w_inv, &inner)?.concat(&self.retract_right(j, &ti));
        let decomposition = self.equal_in(j, &self.retract_right(j, b), &rhs, opts);

        let mut uniqueness = Uniqueness::Unique;
        for &(s2, s) in &pairs {
            // b1 = s⁻¹ b0 s′ has trivial retractions on both sides.
            let b1 = Word(alloc::vec![Letter::neg(s)]).concat(&b0).concat(&Word(alloc::vec![Letter::pos(s2)]));
            match self.braid_equal(&b1, &b0, opts).verdict {
                Verdict::Equal => {}
                Verdict::Distinct => {
                    uniqueness = Uniqueness::NotUnique { other: b1 };
                    break;
                }
                Verdict::Unknown => uniqueness = Uniqueness::Unknown,
            }
        }
        Ok(DoubleCoset {
            b0,
            b0_other_order: other,
            orders_agree,
            w,
            i1,
            j1,
            pairs,
            retract_left_trivial,
            retract_right_trivial,
            decomposition,
            uniqueness,
        })
    }

    /// Reduces `ᵇB_J ∩ B_I` step by step, checking each identity used.
    pub fn reduce_intersection(&self, i: GenSet, j: GenSet, b: &Word, opts: EqualityOptions) -> Result<IntersectionReduction> {
        let mut checks = Vec::new();
        let c = self.retract_braid(i, b);
        let ti = self.tail(i, b);
        let b0 = self.tail_right(j, &ti);
        let rebuilt = c.concat(&b0).concat(&self.retract_right(j, &ti));
        checks.push((String::from("b = pi_I(b) b0 pi^r_J(t_I(b))"), self.braid_equal(b, &rebuilt, opts).verdict));
        checks.push((String::from("pi_I(b0) = 1"), self.equal_in(i, &self.retract_braid(i, &b0), &Word::empty(), opts)));
        checks.push((String::from("pi^r_J(b0) = 1"), self.equal_in(j, &self.retract_right(j, &b0), &Word::empty(), opts)));

        let w = self.project(&b0);
        let j1 = self.solomon_intersection(i, j, &w)?;
        let target = self.ribbon_target(j1, &self.inverse(&w));
        let i1: GenSet = j1.iter().map(|s| self.conjugate_generator(&w, s).word()[0]).collect();
        let is_ribbon = matches!(self.ribbon_target(i1, &w), Some((t, _)) if t == j1) && target.is_some();
        checks.push((String::from("pr(b0) is an I1-ribbon-J1"), verdict(is_ribbon)));

        let lift = Word::lift(&w);
        for s in j1.iter() {
            let image = self.conjugate_generator(&w, s).word()[0];
            let lhs = lift.concat(&Word::positive(&[s]));
            let rhs = Word::positive(&[image]).concat(&lift);
            checks.push((alloc::format!("lift conjugates {} to {}", self.name(s), self.name(image)), self.positive_equal(&lhs, &rhs)));
        }

        let pure = b0.concat(&lift.inverse()).free_reduce();
        checks.push((String::from("p is pure"), verdict(self.is_pure(&pure))));
        checks.push((String::from("pi_I1(p) = 1"), self.equal_in(i1, &self.retract_braid(i1, &pure), &Word::empty(), opts)));
        Ok(IntersectionReduction {
            conjugator: c,
            b0,
            i1,
            j1,
            ribbon: w,
            pure,
            i1_finite: self.is_finite_type(i1),
            checks,
        })
    }

    /// `ν(K, s) = w₀(C∖{s})·w₀(C)` where `C` is the component of `K ∪ {s}`
    /// containing `s`, when `W_C` is finite.
    pub fn elementary_ribbon(&self, k: GenSet, s: Gen) -> Option<(WElement, GenSet, Vec<(Gen, Gen)>)> {
        if k.contains(s) {
            return None;
        }
        let comp = self.components(k.with(s)).into_iter().find(|c| c.contains(s))?;
        if !self.is_finite_type(comp) {
            return None;
        }
        let nu = self.multiply(&self.longest_element(comp.without(s)).ok()?, &self.longest_element(comp).ok()?);
        let (target, pairs) = self.ribbon_target(k, &nu)?;
        Some((nu, target, pairs))
    }

    /// All bijections `φ : J → I` induced by `I`-ribbons-`J`, by a search
    /// over pairs `(I′, φ : I′ → I)` joined by elementary ribbons.
    pub fn ribbon_solver(&self, i: GenSet, j: GenSet) -> (Vec<RibbonIso>, RibbonGraph) {
        let start: Vec<(Gen, Gen)> = i.iter().map(|s| (s, s)).collect();
        let mut index: BTreeMap<(GenSet, Vec<(Gen, Gen)>), usize> = BTreeMap::new();
        let mut graph = RibbonGraph { vertices: alloc::vec![(i, start.clone())], edges: Vec::new() };
        let mut witness = alloc::vec![WElement::identity()];
        index.insert((i, start), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            let (k, phi) = graph.vertices[v].clone();
            let lookup: BTreeMap<Gen, Gen> = phi.iter().copied().collect();
            for s in 0..self.rank() as Gen {
                let Some((nu, target, pairs)) = self.elementary_ribbon(k, s) else {
                    continue;
                };
                let mut map: Vec<(Gen, Gen)> = pairs.iter().map(|&(a, b)| (a, lookup[&b])).collect();
                map.sort();
                let key = (target, map);
                let to = match index.get(&key) {
                    Some(&to) => to,
                    None => {
                        let to = graph.vertices.len();
                        index.insert(key.clone(), to);
                        graph.vertices.push(key);
                        witness.push(self.multiply(&witness[v], &nu));
                        queue.push_back(to);
                        to
                    }
                };
                graph.edges.push((v, to, nu));
            }
        }
        let mut out: Vec<RibbonIso> = graph
            .vertices
            .iter()
            .enumerate()
            .filter(|(_, (k, _))| *k == j)
            .map(|(n, (_, map))| RibbonIso { map: map.clone(), witness: witness[n].clone() })
            .collect();
        out.sort();
        (out, graph)
    }

    /// Every `φ` induced by an `I`-ribbon-`J` of length at most `max_len`,
    /// by enumerating `W`.
    pub fn ribbon_brute_force(&self, i: GenSet, j: GenSet, max_len: usize) -> Result<BTreeSet<Vec<(Gen, Gen)>>> {
        let mut out = BTreeSet::new();
        let mut layer = alloc::vec![WElement::identity()];
        let mut seen: BTreeSet<WElement> = layer.iter().cloned().collect();
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for w in &layer {
                if let Some((t, pairs)) = self.ribbon_target(i, w) {
                    if t == j {
                        out.insert(pairs);
                    }
                }
                for s in 0..self.rank() as Gen {
                    let ws = self.multiply(w, &self.generator(s));
                    if ws.length() > w.length() && seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
                if seen.len() > crate::oracle::MAX_ENUMERATION {
                    return Err(Error::BoundExceeded(crate::oracle::MAX_ENUMERATION));
                }
            }
            layer = next;
        }
        Ok(out)
    }

    /// Shortest `B_I`-conjugates of `i`, found by testing every freely
    /// reduced word over `I^{±1}` of increasing length.
    pub fn minimal_conjugates(&self, i: GenSet, b: &Word) -> Result<MinimalConjugates> {
        let matcher = self.class_matcher(i, b)?;
        let lambda = b.exponent_sum();
        let letters: Vec<Letter> = i.iter().flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
        let mut visited = 0usize;
        let mut verdicts = BTreeMap::new();
        for len in (lambda.unsigned_abs() as usize)..=b.len() {
            let mut words = Vec::new();
            let mut stack = alloc::vec![Word::empty()];
            while let Some(w) = stack.pop() {
                visited += 1;
                if visited > MAX_CONJUGATE_WORDS {
                    return Err(Error::BoundExceeded(MAX_CONJUGATE_WORDS));
                }
                let rest = (len - w.len()) as i64;
                if (lambda - w.exponent_sum()).abs() > rest {
                    continue;
                }
                if rest == 0 {
                    words.push(w);
                    continue;
                }
                for &l in &letters {
                    if w.letters().last() != Some(&l.inverse()) {
                        let mut v = w.0.clone();
                        v.push(l);
                        stack.push(Word(v));
                    }
                }
            }
            let mut found: BTreeMap<_, Word> = BTreeMap::new();
            for w in words {
                let key = self.local_key(i, &w)?;
                if found.contains_key(&key) {
                    continue;
                }
                let hit = match verdicts.get(&key) {
                    Some(&v) => v,
                    None => *verdicts.entry(key.clone()).or_insert(self.in_class(&matcher, &w)?),
                };
                if hit {
                    found.insert(key, w);
                }
            }
            if !found.is_empty() {
                let mut forms = Vec::new();
                for w in found.into_values() {
                    let g = self.local_conjugacy(i, b, &w)?.expect("same conjugacy class");
                    forms.push((w, g));
                }
                forms.sort();
                return Ok(MinimalConjugates { length: len, forms });
            }
        }
        unreachable!("b itself is a conjugate of its own length")
    }

    fn support_in(&self, k: GenSet, b: &Word) -> Result<GenSet> {
        let mut s = b.alphabet();
        for g in b.alphabet().iter() {
            let smaller = s.without(g);
            if self.local_equal(k, &self.retract_braid(smaller, b), b)? {
                s = smaller;
            }
        }
        Ok(s)
    }

    /// Decides whether `i ∈ B_I` and `j ∈ B_J` are conjugate in `B`, using
    /// minimal conjugates in `B_I`, `B_J` and ribbons between their supports.
    pub fn conjugacy_reducible(&self, i: GenSet, j: GenSet, a: &Word, b: &Word, opts: EqualityOptions) -> Result<ConjugacyReport> {
        for (set, w) in [(i, a), (j, b)] {
            if !w.alphabet().is_subset(set) {
                return Err(Error::Alphabet(alloc::format!("word leaves {{{}}}", self.format_subset(set))));
            }
        }
        let minimal_i = self.minimal_conjugates(i, a)?;
        let minimal_j = self.minimal_conjugates(j, b)?;
        let report = |verdict| ConjugacyReport { verdict, minimal_i: minimal_i.clone(), minimal_j: minimal_j.clone() };
        if a.exponent_sum() != b.exponent_sum() {
            return Ok(report(ConjugacyVerdict::NotConjugate { reason: String::from("exponent sums differ") }));
        }
        if minimal_i.length != minimal_j.length {
            return Ok(report(ConjugacyVerdict::NotConjugate { reason: String::from("minimal lengths differ") }));
        }
        let mut ribbons: BTreeMap<(GenSet, GenSet), Vec<RibbonIso>> = BTreeMap::new();
        for (fi, c) in &minimal_i.forms {
            let si = self.support_in(i, fi)?;
            let fi = self.retract_braid(si, fi);
            for (fj, d) in &minimal_j.forms {
                let sj = self.support_in(j, fj)?;
                if si.len() != sj.len() {
                    continue;
                }
                let fj = self.retract_braid(sj, fj);
                let isos = ribbons.entry((si, sj)).or_insert_with(|| self.ribbon_solver(si, sj).0);
                for iso in isos.iter() {
                    let map: BTreeMap<Gen, Gen> = iso.map.iter().copied().collect();
                    let image = fj.map_gens(|g| map[&g]);
                    if !self.local_equal(si, &fi, &image)? {
                        continue;
                    }
                    let g = c.concat(&Word::lift(&iso.witness)).concat(&d.inverse());
                    let lhs = g.inverse().concat(a).concat(&g);
                    let verified = self.braid_equal(&lhs, b, opts).verdict;
                    return Ok(report(ConjugacyVerdict::Conjugate { conjugator: g, verified }));
                }
            }
        }
        Ok(report(ConjugacyVerdict::NotConjugate { reason: String::from("no ribbon matches minimal conjugates") }))
    }

    /// A minimal parabolic subgroup `c B_K c⁻¹` containing `b`.
    pub fn minimal_parabolic(&self, b: &Word) -> Result<MinimalParabolic> {
        let k = b.alphabet();
        let mins = self.minimal_conjugates(k, b)?;
        let mut best: Option<MinimalParabolic> = None;
        for (form, g) in mins.forms {
            let support = self.support_in(k, &form)?;
            let form = self.retract_braid(support, &form);
            let better = best.as_ref().is_none_or(|x| (support.len(), support.bits()) < (x.support.len(), x.support.bits()));
            if better {
                best = Some(MinimalParabolic { support, conjugator: g, form });
            }
        }
        Ok(best.expect("at least one minimal conjugate"))
    }

    /// Checks the claim that a pure `p` centralising an `ℓ_S`-minimal `b`
    /// with `π_{supp b}(p) = 1` centralises `B_{supp b}`, on one instance.
    pub fn conjecture_instance_check(&self, b: &Word, p: &Word, opts: EqualityOptions) -> Result<ConjectureReport> {
        let k = b.alphabet();
        let support = self.support_in(k, b)?;
        let mut checks = Vec::new();
        let shortest = self.length_s(b)?.len();
        let minimal = self.minimal_conjugates(k, b)?.length;
        checks.push((String::from("b is minimal in its conjugacy class"), verdict(shortest == minimal)));
        checks.push((String::from("p is pure"), verdict(self.is_pure(p))));
        let commute = self.braid_equal(&p.concat(b), &b.concat(p), opts).verdict;
        checks.push((String::from("p centralises b"), commute));
        let retract = self.equal_in(support, &self.retract_braid(support, p), &Word::empty(), opts);
        checks.push((String::from("pi_supp(b)(p) = 1"), retract));
        let mut results = Vec::new();
        for s in support.iter() {
            let sw = Word::positive(&[s]);
            let v = self.braid_equal(&p.concat(&sw), &sw.concat(p), opts).verdict;
            checks.push((alloc::format!("p commutes with {}", self.name(s)), v));
            results.push(v);
        }
        let failed = checks[..4].iter().find(|c| c.1 == Verdict::Distinct);
        let verdict = if let Some((name, _)) = failed {
            ConjectureVerdict::HypothesesNotMet(alloc::format!("fails: {name}"))
        } else if checks[..4].iter().any(|c| c.1 == Verdict::Unknown) {
            ConjectureVerdict::Unknown
        } else if results.contains(&Verdict::Distinct) {
            ConjectureVerdict::Refuting
        } else if results.contains(&Verdict::Unknown) {
            ConjectureVerdict::Unknown
        } else {
            ConjectureVerdict::Supporting
        };
        Ok(ConjectureReport { verdict, support, checks })
    }
}
