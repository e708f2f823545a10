//! The positive monoid `B⁺`: simples, left-greedy normal forms, divisibility,
//! gcd, lcm, `H_I` and positive ribbons.

use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, Gen, GenSet, WElement};
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Simple braids are identified with elements of `W`.
pub type Simple = WElement;

/// Default bound on `λ` of a right-lcm computed by reversing.
pub const DEFAULT_LCM_BOUND: usize = 64;

/// A positive braid in left-greedy normal form.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PositiveBraid {
    factors: Vec<Simple>,
}

impl PositiveBraid {
    pub fn identity() -> PositiveBraid {
        PositiveBraid::default()
    }

    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn lambda(&self) -> usize {
        self.factors.iter().map(WElement::length).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn head(&self) -> Simple {
        self.factors.first().cloned().unwrap_or_default()
    }

    pub fn to_word(&self) -> Word {
        Word::positive(&self.factors.iter().flat_map(|f| f.word().iter().copied()).collect::<Vec<_>>())
    }

    pub fn alphabet(&self) -> GenSet {
        self.factors.iter().fold(GenSet::EMPTY, |acc, f| acc.union(f.letters()))
    }
}

/// A certified comparison of `π_I(b)` with the normal form of `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractedNormalForm {
    pub image: PositiveBraid,
    /// Number of factors of `b`.
    pub n: usize,
    /// Number of factors of `π_I(b)`.
    pub m: usize,
    /// `π_I(b₁⋯b_i)` left-divides `i₁⋯i_i` for every `i ≤ m`.
    pub prefixes_divide: bool,
}

/// Outcome of a positive ribbon check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonReport {
    pub support: GenSet,
    /// `supp(b)^{pr(g)}`.
    pub target: GenSet,
    /// Pairs `(j, i)` with `g⁻¹ i g = j`.
    pub pairs: Vec<(Gen, Gen)>,
    pub conjugate: PositiveBraid,
    pub head_is_ribbon: bool,
}

impl CoxeterSystem {
    /// `u ≼ v` in the left weak order.
    pub fn weak_le(&self, u: &WElement, v: &WElement) -> bool {
        u.length() <= v.length() && self.multiply(&self.inverse(u), v).length() == v.length() - u.length()
    }

    fn right_ascent(&self, u: &WElement, s: Gen) -> bool {
        self.root_sign(&self.act_on_root(u, &self.simple_root(s))) > 0
    }

    /// Moves left descents of `v` into `u` while `u` stays simple.
    pub fn normalize_pair(&self, u: &Simple, v: &Simple) -> (Simple, Simple) {
        let mut u = u.clone();
        let mut v = v.clone();
        loop {
            let next = self.left_descents(&v).iter().find(|&s| self.right_ascent(&u, s));
            match next {
                Some(s) => {
                    let g = self.generator(s);
                    u = self.multiply(&u, &g);
                    v = self.multiply(&g, &v);
                }
                None => return (u, v),
            }
        }
    }

    /// Left-greedy normal form of a product of simples.
    pub fn normalize(&self, factors: &[Simple]) -> PositiveBraid {
        let mut nf: Vec<Simple> = Vec::new();
        for f in factors.iter().rev() {
            if f.is_identity() {
                continue;
            }
            nf.insert(0, f.clone());
            for k in 0..nf.len() - 1 {
                let (a, b) = self.normalize_pair(&nf[k], &nf[k + 1]);
                let done = b == nf[k + 1];
                nf[k] = a;
                nf[k + 1] = b;
                if done {
                    break;
                }
            }
            nf.retain(|x| !x.is_identity());
        }
        PositiveBraid { factors: nf }
    }

    pub fn positive_from_word(&self, w: &Word) -> Result<PositiveBraid> {
        if !w.is_positive() {
            return Err(Error::NotPositive);
        }
        let simples: Vec<Simple> = w.letters().iter().map(|l| self.generator(l.gen)).collect();
        Ok(self.normalize(&simples))
    }

    pub fn positive_product(&self, a: &PositiveBraid, b: &PositiveBraid) -> PositiveBraid {
        let mut f = a.factors.clone();
        f.extend_from_slice(&b.factors);
        self.normalize(&f)
    }

    /// Meet of two simples in the left weak order.
    pub fn simple_meet(&self, u: &Simple, v: &Simple) -> Simple {
        let mut m = WElement::identity();
        loop {
            let next = (0..self.rank() as Gen).find_map(|s| {
                let ms = self.multiply(&m, &self.generator(s));
                (ms.length() > m.length() && self.weak_le(&ms, u) && self.weak_le(&ms, v)).then_some(ms)
            });
            match next {
                Some(ms) => m = ms,
                None => return m,
            }
        }
    }

    /// `u⁻¹b` when the simple `u` left-divides `b`.
    pub fn left_divide_simple(&self, b: &PositiveBraid, u: &Simple) -> Option<PositiveBraid> {
        if u.is_identity() {
            return Some(b.clone());
        }
        let head = b.head();
        if !self.weak_le(u, &head) {
            return None;
        }
        let mut f = vec![self.multiply(&self.inverse(u), &head)];
        f.extend_from_slice(b.factors.get(1..).unwrap_or(&[]));
        Some(self.normalize(&f))
    }

    /// `a⁻¹b` when `a` left-divides `b`.
    pub fn left_quotient(&self, a: &PositiveBraid, b: &PositiveBraid) -> Option<PositiveBraid> {
        a.factors.iter().try_fold(b.clone(), |acc, f| self.left_divide_simple(&acc, f))
    }

    pub fn left_divides(&self, a: &PositiveBraid, b: &PositiveBraid) -> bool {
        self.left_quotient(a, b).is_some()
    }

    pub fn left_gcd(&self, a: &PositiveBraid, b: &PositiveBraid) -> PositiveBraid {
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut out = Vec::new();
        loop {
            let m = self.simple_meet(&a.head(), &b.head());
            if m.is_identity() {
                return self.normalize(&out);
            }
            a = self.left_divide_simple(&a, &m).expect("meet divides head");
            b = self.left_divide_simple(&b, &m).expect("meet divides head");
            out.push(m);
        }
    }

    /// Right-lcm by right reversing of `a⁻¹b`.
    pub fn right_lcm(&self, a: &PositiveBraid, b: &PositiveBraid, bound: usize) -> Result<PositiveBraid> {
        let mut w: Vec<Letter> = a.to_word().inverse().letters().to_vec();
        w.extend_from_slice(b.to_word().letters());
        let max_steps = 64 * bound * bound + 1024;
        let mut steps = 0;
        while let Some(k) = w.windows(2).position(|p| p[0].inv && !p[1].inv) {
            steps += 1;
            let (s, t) = (w[k].gen, w[k + 1].gen);
            let repl: Vec<Letter> = if s == t {
                Vec::new()
            } else {
                let m = self.m(s, t);
                if m == 0 {
                    return Err(Error::NoCommonMultiple);
                }
                let m = m as usize;
                let alt = |x: Gen, y: Gen| (0..m - 1).map(move |i| if i % 2 == 0 { x } else { y });
                let mut r: Vec<Letter> = alt(t, s).map(Letter::pos).collect();
                let tail: Vec<Gen> = alt(s, t).collect();
                r.extend(tail.iter().rev().map(|&g| Letter::neg(g)));
                r
            };
            w.splice(k..k + 2, repl);
            let positive = w.iter().filter(|l| !l.inv).count();
            if steps > max_steps || positive > 4 * bound {
                return Err(Error::LcmBoundExceeded(bound));
            }
        }
        let v: Vec<Gen> = w.iter().filter(|l| !l.inv).map(|l| l.gen).collect();
        let result = self.positive_product(a, &self.positive_from_word(&Word::positive(&v))?);
        if result.lambda() > bound {
            return Err(Error::LcmBoundExceeded(bound));
        }
        Ok(result)
    }

    /// `π_I(b)` for a positive braid.
    pub fn retract_positive(&self, i: GenSet, b: &PositiveBraid) -> PositiveBraid {
        let image = self.retract_word(i, &b.to_word());
        self.positive_from_word(&image).expect("retraction keeps positivity")
    }

    /// `π_I(b)` together with the factor-by-factor comparison of normal forms.
    pub fn retract_positive_checked(&self, i: GenSet, b: &PositiveBraid) -> RetractedNormalForm {
        let image = self.retract_positive(i, b);
        let (n, m) = (b.factors.len(), image.factors.len());
        let prefixes_divide = (1..=m).all(|k| {
            let prefix = self.normalize(&b.factors[..k]);
            let lhs = self.retract_positive(i, &prefix);
            let rhs = self.normalize(&image.factors[..k]);
            self.left_divides(&lhs, &rhs)
        });
        RetractedNormalForm { image, n, m, prefixes_divide }
    }

    /// `H_I(b)`, the greatest left-divisor of `b` lying in `B_I⁺`.
    pub fn h_i(&self, i: GenSet, b: &PositiveBraid) -> PositiveBraid {
        let mut rest = b.clone();
        let mut out = Vec::new();
        loop {
            let (u, _) = self.coset_split_left(i, &rest.head());
            if u.is_identity() {
                return self.normalize(&out);
            }
            rest = self.left_divide_simple(&rest, &u).expect("prefix of head");
            out.push(u);
        }
    }

    /// Checks that a positive `g` conjugating `b` into `B⁺` is a
    /// `supp(b)`-ribbon.
    pub fn positive_ribbon_check(&self, b: &PositiveBraid, g: &PositiveBraid) -> Result<RibbonReport> {
        let support = b.alphabet();
        if !self.h_i(support, g).is_identity() {
            return Err(Error::NotReduced);
        }
        let bg = self.positive_product(b, g);
        let conjugate = self.left_quotient(g, &bg).ok_or(Error::NotConjugatePositive)?;
        let mut pairs = Vec::new();
        for s in support.iter() {
            let sg = self.positive_product(&self.positive_from_word(&Word::positive(&[s]))?, g);
            let q = self.left_quotient(g, &sg).ok_or(Error::NotConjugatePositive)?;
            match q.factors() {
                [f] if f.length() == 1 => pairs.push((f.word()[0], s)),
                _ => return Err(Error::NotConjugatePositive),
            }
        }
        pairs.sort();
        let target: GenSet = pairs.iter().map(|p| p.0).collect();
        let head = g.head();
        let head_is_ribbon = head.is_identity() || self.ribbon_target(support, &head).is_some();
        Ok(RibbonReport { support, target, pairs, conjugate, head_is_ribbon })
    }
}
