//! Buchberger's algorithm with the Gebauer–Möller pair criteria and the
//! sugar selection strategy.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use crate::fieldpoly::{Monomial, Polynomial, Ring};

use super::{GroebnerConfig, GroebnerError};

/// Cooperative deadline checked inside the reduction loop.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Deadline {
    start: Instant,
    limit: Option<Instant>,
}

impl Deadline {
    pub(crate) fn new(config: &GroebnerConfig) -> Self {
        let start = Instant::now();
        Deadline { start, limit: config.timeout.map(|t| start + t) }
    }

    #[inline]
    pub(crate) fn check(&self) -> Result<(), GroebnerError> {
        match self.limit {
            Some(l) if Instant::now() >= l => {
                Err(GroebnerError::Timeout { elapsed_ms: self.start.elapsed().as_millis() as u64 })
            }
            _ => Ok(()),
        }
    }
}

struct Element {
    poly: Polynomial,
    lm: Monomial,
    mask: u64,
    sugar: u32,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    sugar: u32,
    i: usize,
    j: usize,
}

pub(crate) struct Buchberger<'a> {
    ring: Arc<Ring>,
    elems: Vec<Element>,
    active: Vec<bool>,
    pairs: BTreeSet<Pair>,
    deadline: &'a Deadline,
    steps: u64,
}

impl<'a> Buchberger<'a> {
    pub(crate) fn new(ring: &Arc<Ring>, deadline: &'a Deadline) -> Self {
        Buchberger {
            ring: ring.clone(),
            elems: Vec::new(),
            active: Vec::new(),
            pairs: BTreeSet::new(),
            deadline,
            steps: 0,
        }
    }

    fn tick(&mut self) -> Result<(), GroebnerError> {
        self.steps += 1;
        if self.steps.is_multiple_of(64) {
            self.deadline.check()?;
        }
        Ok(())
    }

    fn find_reducer(&self, m: &Monomial, mask: u64) -> Option<usize> {
        (0..self.elems.len())
            .find(|&k| self.active[k] && self.elems[k].mask & !mask == 0 && self.elems[k].lm.divides(m))
    }

    /// Full reduction by the active elements; returns the remainder and its sugar.
    fn reduce(&mut self, p: Polynomial, sugar: u32) -> Result<(Polynomial, u32), GroebnerError> {
        let mut sugar = sugar;
        let mut rem: Vec<(Monomial, crate::fieldpoly::Coeff)> = Vec::new();
        let mut cur = p;
        while let Some((m, c)) = cur.leading_term().cloned() {
            self.tick()?;
            match self.find_reducer(&m, m.support_mask()) {
                Some(k) => {
                    let e = &self.elems[k];
                    let q = e.lm.quotient_of(&m);
                    // reducers are monic
                    sugar = sugar.max(q.degree() + e.sugar);
                    cur = cur.sub_term_multiple(&c, &q, &e.poly);
                }
                None => {
                    rem.push((m, c));
                    cur.drop_leading();
                }
            }
        }
        Ok((Polynomial::from_sorted_terms(&self.ring, rem), sugar))
    }

    fn s_poly(&self, pair: &Pair) -> Polynomial {
        let a = &self.elems[pair.i];
        let b = &self.elems[pair.j];
        let l = a.lm.lcm(&b.lm);
        let one = self.ring.field().one();
        let fa = a.poly.mul_term(&a.lm.quotient_of(&l), &one);
        fa.sub_term_multiple(&one, &b.lm.quotient_of(&l), &b.poly)
    }

    fn pair_sugar(&self, i: usize, j: usize) -> u32 {
        let a = &self.elems[i];
        let b = &self.elems[j];
        let l = a.lm.lcm(&b.lm);
        (a.sugar + l.degree() - a.lm.degree()).max(b.sugar + l.degree() - b.lm.degree())
    }

    /// Insert a nonzero reduced polynomial and update the pair set.
    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let h = h.monic();
        let lm = h.leading_monomial().expect("nonzero").clone();
        let t = self.elems.len();
        let mask = lm.support_mask();
        self.elems.push(Element { poly: h, lm: lm.clone(), mask, sugar });
        self.active.push(true);

        // Candidate new pairs (g, h), Gebauer–Möller criteria.
        let cands: Vec<(usize, Monomial)> =
            (0..t).filter(|&g| self.active[g]).map(|g| (g, self.elems[g].lm.lcm(&lm))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g, l)) in cands.iter().enumerate() {
            let coprime = self.elems[*g].lm.is_coprime(&lm);
            let dominated =
                cands.iter().enumerate().any(|(k, (_, l2))| k != idx && l2.divides(l) && (l2 != l || k < idx));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        // Product criterion.
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !self.elems[*g].lm.is_coprime(&lm))
            .map(|(g, _)| Pair { sugar: self.pair_sugar(g, t), i: g, j: t })
            .collect();

        // Chain criterion on old pairs.
        let old: Vec<Pair> = std::mem::take(&mut self.pairs).into_iter().collect();
        for p in old {
            let l = self.elems[p.i].lm.lcm(&self.elems[p.j].lm);
            let li = self.elems[p.i].lm.lcm(&lm);
            let lj = self.elems[p.j].lm.lcm(&lm);
            if lm.divides(&l) && li != l && lj != l {
                continue;
            }
            self.pairs.insert(p);
        }
        self.pairs.extend(new_pairs);

        for g in 0..t {
            if self.active[g] && lm.divides(&self.elems[g].lm) {
                self.active[g] = false;
            }
        }
    }

    /// Run to completion. Returns the reduced basis sorted by increasing
    /// leading monomial.
    pub(crate) fn run(mut self, generators: &[Polynomial]) -> Result<Vec<Polynomial>, GroebnerError> {
        self.deadline.check()?;
        let order = self.ring.order().clone();
        let mut gens: Vec<Polynomial> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
        gens.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        for g in gens {
            let s = g.degree().unwrap_or(0);
            let (h, s) = self.reduce(g, s)?;
            if h.is_zero() {
                continue;
            }
            if h.is_constant() {
                return Ok(vec![Polynomial::one(&self.ring)]);
            }
            self.insert(h, s);
        }
        while let Some(pair) = self.pairs.pop_first() {
            self.deadline.check()?;
            let s = self.s_poly(&pair);
            let (h, sugar) = self.reduce(s, pair.sugar)?;
            if h.is_zero() {
                continue;
            }
            if h.is_constant() {
                return Ok(vec![Polynomial::one(&self.ring)]);
            }
            self.insert(h, sugar);
        }
        self.interreduce()
    }

    fn interreduce(mut self) -> Result<Vec<Polynomial>, GroebnerError> {
        let keep: Vec<usize> = (0..self.elems.len()).filter(|&k| self.active[k]).collect();
        let mut out = Vec::with_capacity(keep.len());
        for &k in &keep {
            // reduce tail of element k by the other active elements
            self.active[k] = false;
            let p = self.elems[k].poly.clone();
            let (lm, lc) = p.leading_term().cloned().expect("nonzero");
            let tail = p.tail();
            let (r, _) = self.reduce(tail, 0)?;
            self.active[k] = true;
            let head = Polynomial::monomial(&self.ring, lm, lc);
            out.push((&head + &r).monic());
        }
        let order = self.ring.order().clone();
        out.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        Ok(out)
    }
}
