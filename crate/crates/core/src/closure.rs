//! Closed and biclosed sets of positive roots, and the lattice operations
//! they induce on inversion sets.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, Root, WElement};
use crate::error::{Error, Result};
use crate::field::Scalar;

/// Default depth of the root pool used when `W` is infinite.
pub const DEFAULT_POOL_DEPTH: usize = 8;

impl CoxeterSystem {
    /// The roots over which closures are taken: all of `Φ⁺` for finite `W`,
    /// else the positive roots of depth at most `depth`.
    pub fn root_pool(&self, depth: usize) -> BTreeSet<Root> {
        if self.is_finite_type(self.all()) {
            self.positive_roots(self.all(), None)
        } else {
            self.positive_roots(self.all(), Some(depth))
        }
    }

    /// Whether `γ = aα + bβ` with `a, b > 0`.
    pub fn in_open_cone(&self, alpha: &Root, beta: &Root, gamma: &Root) -> bool {
        let ring = self.ring();
        let (a, b, g) = (alpha.coords(), beta.coords(), gamma.coords());
        let n = a.len();
        let minor = |x: &[Scalar], y: &[Scalar], i: usize, j: usize| {
            let mut d = ring.mul(&x[i], &y[j]);
            d.sub_assign(&ring.mul(&x[j], &y[i]));
            d
        };
        let mut pivot = None;
        'outer: for i in 0..n {
            for j in i + 1..n {
                let d = minor(a, b, i, j);
                if !d.is_zero() {
                    pivot = Some((i, j, d));
                    break 'outer;
                }
            }
        }
        let Some((i, j, det)) = pivot else {
            return false;
        };
        // Cramer: γ = (ca/det)α + (cb/det)β.
        let ca = minor(g, b, i, j);
        let cb = minor(a, g, i, j);
        for k in 0..n {
            let mut lhs = ring.mul(&det, &g[k]);
            lhs.sub_assign(&ring.mul(&ca, &a[k]));
            lhs.sub_assign(&ring.mul(&cb, &b[k]));
            if !lhs.is_zero() {
                return false;
            }
        }
        let sd = ring.sign(&det);
        ring.sign(&ca) * sd > 0 && ring.sign(&cb) * sd > 0
    }

    /// Smallest subset of `pool` containing `set` and closed under positive
    /// combinations of two of its roots.
    pub fn closure_in(&self, set: &BTreeSet<Root>, pool: &BTreeSet<Root>) -> BTreeSet<Root> {
        let mut cur: BTreeSet<Root> = set.clone();
        loop {
            let members: Vec<&Root> = cur.iter().collect();
            let added: Vec<Root> = pool
                .iter()
                .filter(|g| !cur.contains(*g))
                .filter(|g| {
                    members.iter().enumerate().any(|(x, a)| {
                        members[x + 1..].iter().any(|b| self.in_open_cone(a, b, g))
                    })
                })
                .cloned()
                .collect();
            if added.is_empty() {
                return cur;
            }
            cur.extend(added);
        }
    }

    pub fn biclosed_closure(&self, set: &BTreeSet<Root>, pool_depth: usize) -> BTreeSet<Root> {
        let mut pool = self.root_pool(pool_depth);
        pool.extend(set.iter().cloned());
        self.closure_in(set, &pool)
    }

    pub fn is_closed_in(&self, set: &BTreeSet<Root>, pool: &BTreeSet<Root>) -> bool {
        self.closure_in(set, pool) == *set
    }

    pub fn is_biclosed_in(&self, set: &BTreeSet<Root>, pool: &BTreeSet<Root>) -> bool {
        let complement: BTreeSet<Root> = pool.difference(set).cloned().collect();
        set.is_subset(pool) && self.is_closed_in(set, pool) && self.is_closed_in(&complement, pool)
    }

    /// The element `v` with `N(v) = set`, if there is one.
    pub fn element_from_inversions(&self, set: &BTreeSet<Root>) -> Option<WElement> {
        let mut cur = set.clone();
        let mut word = Vec::new();
        while !cur.is_empty() {
            let s = cur.iter().find_map(|r| match r.as_simple() {
                Some((s, true)) => Some(s),
                _ => None,
            })?;
            cur.remove(&self.simple_root(s));
            let mut next = BTreeSet::new();
            for r in &cur {
                let mut img = r.clone();
                self.reflect_simple(s, &mut img);
                if self.root_sign(&img) < 0 {
                    return None;
                }
                next.insert(img);
            }
            cur = next;
            word.push(s);
        }
        let v = self.element(&word);
        (v.length() == set.len() && self.inversion_set(&v) == *set).then_some(v)
    }

    fn check_inversion_set(&self, set: &BTreeSet<Root>) -> Result<WElement> {
        self.element_from_inversions(set).ok_or(Error::NotBiclosed)
    }

    /// `N(pr(lcm))` for two inversion sets: the closure of their union.
    pub fn dyer_lcm(&self, n1: &BTreeSet<Root>, n2: &BTreeSet<Root>, pool_depth: usize) -> Result<(BTreeSet<Root>, WElement)> {
        self.check_inversion_set(n1)?;
        self.check_inversion_set(n2)?;
        let mut pool = self.root_pool(pool_depth);
        pool.extend(n1.iter().cloned());
        pool.extend(n2.iter().cloned());
        let union: BTreeSet<Root> = n1.union(n2).cloned().collect();
        let closed = self.closure_in(&union, &pool);
        match self.element_from_inversions(&closed) {
            Some(v) => Ok((closed, v)),
            None if self.is_finite_type(self.all()) => Err(Error::NotBiclosed),
            None => Err(Error::NoCommonMultiple),
        }
    }

    /// `N(pr(gcd))`: the complement of the closure of the complement of the
    /// intersection, taken inside the root pool.
    pub fn dyer_gcd(&self, n1: &BTreeSet<Root>, n2: &BTreeSet<Root>, pool_depth: usize) -> Result<(BTreeSet<Root>, WElement)> {
        self.check_inversion_set(n1)?;
        self.check_inversion_set(n2)?;
        let mut pool = self.root_pool(pool_depth);
        pool.extend(n1.iter().cloned());
        pool.extend(n2.iter().cloned());
        let inter: BTreeSet<Root> = n1.intersection(n2).cloned().collect();
        let complement: BTreeSet<Root> = pool.difference(&inter).cloned().collect();
        let closed = self.closure_in(&complement, &pool);
        let result: BTreeSet<Root> = pool.difference(&closed).cloned().collect();
        let v = self.check_inversion_set(&result)?;
        Ok((result, v))
    }
}
