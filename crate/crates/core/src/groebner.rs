//! Homogeneous Buchberger algorithm for submodules of graded free modules.
//!
//! The computation runs degree by degree. In each degree the pending S-pairs
//! are reduced first and the inputs of that degree afterwards, so an input
//! that survives reduction is a minimal generator. Optionally every basis
//! element carries its expression in terms of the inputs; zero reductions then
//! yield generators of the syzygy module of the inputs (Schreyer).

use std::collections::{BTreeMap, HashMap};

use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::vector::{cmp_position, Term, Vector};

/// A finished Gröbner basis, usable for normal forms.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    field: PrimeField,
    twists: Vec<i32>,
    elements: Vec<Vector>,
    by_comp: HashMap<u32, Vec<usize>>,
}

impl GroebnerBasis {
    fn new(field: PrimeField, twists: Vec<i32>, elements: Vec<Vector>) -> Self {
        let mut by_comp: HashMap<u32, Vec<usize>> = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            by_comp.entry(e.lead().unwrap().comp).or_default().push(i);
        }
        GroebnerBasis {
            field,
            twists,
            elements,
            by_comp,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Same basis viewed in the free module with all twists moved by `-h`.
    pub fn shifted(&self, h: i32) -> GroebnerBasis {
        let mut g = self.clone();
        for t in &mut g.twists {
            *t -= h;
        }
        g
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Lead monomials per component.
    pub fn leads(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.rank()];
        for e in &self.elements {
            let t = e.lead().unwrap();
            out[t.comp as usize].push(t.mono);
        }
        out
    }

    fn find_divisor(&self, mono: &Monomial, comp: u32) -> Option<usize> {
        self.by_comp
            .get(&comp)?
            .iter()
            .copied()
            .find(|&i| self.elements[i].lead().unwrap().mono.divides(mono))
    }

    /// True when the term (mono, comp) lies in the lead-term module.
    pub fn is_lead_reducible(&self, mono: &Monomial, comp: u32) -> bool {
        self.find_divisor(mono, comp).is_some()
    }

    /// Fully reduced remainder.
    pub fn normal_form(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        let mut idx = 0;
        while idx < v.terms().len() {
            let t = v.terms()[idx];
            match self.find_divisor(&t.mono, t.comp) {
                Some(k) => {
                    let g = &self.elements[k];
                    let m = t.mono.checked_div(&g.lead().unwrap().mono).unwrap();
                    v = v.combine(1, g, self.field.neg(t.coeff), &m);
                }
                None => idx += 1,
            }
        }
        v
    }

    /// Normal form together with quotients: v = sum q_k * g_k + nf. The
    /// quotients are returned as a vector over the basis indices.
    pub fn divide(&self, v: &Vector) -> (Vector, Vector) {
        let f = self.field;
        let mut v = v.clone();
        let mut quot = Vec::new();
        let mut idx = 0;
        while idx < v.terms().len() {
            let t = v.terms()[idx];
            match self.find_divisor(&t.mono, t.comp) {
                Some(k) => {
                    let g = &self.elements[k];
                    let m = t.mono.checked_div(&g.lead().unwrap().mono).unwrap();
                    v = v.combine(1, g, f.neg(t.coeff), &m);
                    quot.push(Term {
                        coeff: t.coeff,
                        mono: m,
                        comp: k as u32,
                    });
                }
                None => idx += 1,
            }
        }
        (Vector::from_terms(f, quot), v)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.normal_form(v).is_zero()
    }
}

/// Output of a full run.
#[derive(Clone, Debug)]
pub struct GbComputation {
    pub basis: GroebnerBasis,
    /// With tracking: `reps[i]` expresses `basis.elements()[i]` in the inputs.
    pub reps: Vec<Vector>,
    /// With tracking: generators of the syzygy module of the inputs, as
    /// vectors over the input indices (twists = input degrees).
    pub syzygies: Vec<Vector>,
    /// Indices of inputs forming a minimal generating set, increasing.
    pub minimal_inputs: Vec<usize>,
    /// Degrees of the inputs, the twists of the syzygy module.
    pub input_degrees: Vec<i32>,
}

struct Element {
    v: Vector,
    rep: Option<Vector>,
    lead: Monomial,
    comp: u32,
}

struct Engine<'a> {
    field: PrimeField,
    twists: &'a [i32],
    track: bool,
    elems: Vec<Element>,
    by_comp: HashMap<u32, Vec<usize>>,
    pairs: BTreeMap<i32, Vec<(usize, usize)>>,
    syzygies: Vec<Vector>,
    rank_one: bool,
}

impl Engine<'_> {
    fn find_divisor(&self, mono: &Monomial, comp: u32) -> Option<usize> {
        self.by_comp
            .get(&comp)?
            .iter()
            .copied()
            .find(|&i| self.elems[i].lead.divides(mono))
    }

    /// Reduces `v` (and its representation) until the lead is irreducible,
    /// then optionally continues through the tail.
    fn reduce(&self, mut v: Vector, mut rep: Option<Vector>, full: bool) -> (Vector, Option<Vector>) {
        let f = self.field;
        let mut idx = 0;
        while idx < v.terms().len() {
            let t = v.terms()[idx];
            match self.find_divisor(&t.mono, t.comp) {
                Some(k) => {
                    let g = &self.elems[k];
                    let m = t.mono.checked_div(&g.lead).unwrap();
                    let c = f.neg(t.coeff);
                    v = v.combine(1, &g.v, c, &m);
                    if let (Some(r), Some(gr)) = (rep.as_mut(), g.rep.as_ref()) {
                        *r = r.combine(1, gr, c, &m);
                    }
                }
                None => {
                    if !full {
                        break;
                    }
                    idx += 1;
                }
            }
        }
        (v, rep)
    }

    fn insert(&mut self, v: Vector, rep: Option<Vector>) {
        let (v, inv) = v.monic();
        let rep = rep.map(|r| r.scale(inv));
        let lt = *v.lead().unwrap();
        let n = self.elems.len();
        self.elems.push(Element {
            v,
            rep,
            lead: lt.mono,
            comp: lt.comp,
        });
        let same: Vec<usize> = self.by_comp.get(&lt.comp).cloned().unwrap_or_default();
        for i in same {
            let l = self.elems[i].lead.lcm(&lt.mono);
            let deg = l.degree() as i32 + self.twists[lt.comp as usize];
            self.pairs.entry(deg).or_default().push((i, n));
        }
        self.by_comp.entry(lt.comp).or_default().push(n);
    }

    /// Pair criterion: some third element k makes (i, j) redundant.
    fn redundant(&self, i: usize, j: usize, l: &Monomial) -> bool {
        let comp = self.elems[i].comp;
        self.by_comp[&comp].iter().any(|&k| {
            k > i
                && k != j
                && self.elems[k].lead.divides(l)
                && (k < j || self.elems[i].lead.lcm(&self.elems[k].lead) != *l)
        })
    }

    fn process_pair(&mut self, i: usize, j: usize) {
        let f = self.field;
        let (li, lj) = (self.elems[i].lead, self.elems[j].lead);
        let l = li.lcm(&lj);
        if self.rank_one && li.is_coprime(&lj) {
            if self.track {
                // g_j * rep_i - g_i * rep_j
                let gi = self.elems[i].v.component(0);
                let gj = self.elems[j].v.component(0);
                let ri = self.elems[i].rep.as_ref().unwrap();
                let rj = self.elems[j].rep.as_ref().unwrap();
                let s = ri.mul_poly(&gj).sub(&rj.mul_poly(&gi));
                if !s.is_zero() {
                    self.syzygies.push(s);
                }
            }
            return;
        }
        if self.redundant(i, j, &l) {
            return;
        }
        let mi = l.checked_div(&li).unwrap();
        let mj = l.checked_div(&lj).unwrap();
        let s = Vector::zero(f)
            .combine(1, &self.elems[i].v, 1, &mi)
            .combine(1, &self.elems[j].v, f.neg(1), &mj);
        let rep = if self.track {
            let ri = self.elems[i].rep.as_ref().unwrap();
            let rj = self.elems[j].rep.as_ref().unwrap();
            Some(
                Vector::zero(f)
                    .combine(1, ri, 1, &mi)
                    .combine(1, rj, f.neg(1), &mj),
            )
        } else {
            None
        };
        let (r, rep) = self.reduce(s, rep, true);
        if r.is_zero() {
            if let Some(rep) = rep {
                if !rep.is_zero() {
                    self.syzygies.push(rep);
                }
            }
        } else {
            self.insert(r, rep);
        }
    }
}

/// Runs Buchberger on homogeneous `inputs` in the free module with generator
/// degrees `twists`. Panics on inhomogeneous input.
pub fn compute(field: PrimeField, twists: &[i32], inputs: &[Vector], track: bool) -> GbComputation {
    let degrees: Vec<Option<i32>> = inputs.iter().map(|v| v.degree(twists)).collect();
    for (v, d) in inputs.iter().zip(&degrees) {
        assert!(v.is_zero() || d.is_some(), "inhomogeneous module element {v:?}");
    }
    // Zero inputs get the degree of nothing in particular; they only matter
    // as trivial syzygies.
    let input_degrees: Vec<i32> = degrees.iter().map(|d| d.unwrap_or(0)).collect();
    let mut engine = Engine {
        field,
        twists,
        track,
        elems: Vec::new(),
        by_comp: HashMap::new(),
        pairs: BTreeMap::new(),
        syzygies: Vec::new(),
        rank_one: twists.len() == 1,
    };
    let mut order: Vec<usize> = (0..inputs.len()).filter(|&i| degrees[i].is_some()).collect();
    order.sort_by_key(|&i| (input_degrees[i], i));
    if track {
        for (i, d) in degrees.iter().enumerate() {
            if d.is_none() {
                engine.syzygies.push(Vector::unit(field, i, 1));
            }
        }
    }
    let mut minimal = Vec::new();
    let mut next_input = 0;
    loop {
        let pair_deg = engine.pairs.keys().next().copied();
        let input_deg = order.get(next_input).map(|&i| input_degrees[i]);
        let d = match (pair_deg, input_deg) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if let Some(list) = engine.pairs.remove(&d) {
            for (i, j) in list {
                engine.process_pair(i, j);
            }
        }
        while next_input < order.len() && input_degrees[order[next_input]] == d {
            let idx = order[next_input];
            next_input += 1;
            let rep = track.then(|| Vector::unit(field, idx, 1));
            let (r, rep) = engine.reduce(inputs[idx].clone(), rep, true);
            if r.is_zero() {
                if let Some(rep) = rep {
                    engine.syzygies.push(rep);
                }
            } else {
                minimal.push(idx);
                engine.insert(r, rep);
            }
        }
    }
    minimal.sort_unstable();

    // Inter-reduce tails so the basis is the reduced one.
    let n = engine.elems.len();
    for k in 0..n {
        let e = &engine.elems[k];
        let lead_term = *e.v.lead().unwrap();
        let tail = Vector::from_terms(field, e.v.terms()[1..].to_vec());
        let (tail, rep) = engine.reduce(tail, e.rep.clone(), true);
        let head = Vector::from_terms(field, vec![lead_term]);
        engine.elems[k].v = head.add(&tail);
        engine.elems[k].rep = rep;
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        cmp_position(
            (&engine.elems[b].lead, engine.elems[b].comp),
            (&engine.elems[a].lead, engine.elems[a].comp),
        )
    });
    let mut elements = Vec::with_capacity(n);
    let mut reps = Vec::new();
    let mut slots: Vec<Option<Element>> = engine.elems.into_iter().map(Some).collect();
    for i in idx {
        let e = slots[i].take().unwrap();
        elements.push(e.v);
        if let Some(r) = e.rep {
            reps.push(r);
        }
    }
    GbComputation {
        basis: GroebnerBasis::new(field, twists.to_vec(), elements),
        reps,
        syzygies: engine.syzygies,
        minimal_inputs: minimal,
        input_degrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::Poly;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn ideal(gens: &[&str]) -> Vec<Vector> {
        gens.iter()
            .map(|s| Vector::from_poly(&parse_poly(f(), s).unwrap(), 0))
            .collect()
    }

    fn polys(gb: &GroebnerBasis) -> Vec<Poly> {
        gb.elements().iter().map(|v| v.component(0)).collect()
    }

    #[test]
    fn small_examples() {
        let r = compute(f(), &[0], &ideal(&["X^2", "X*Y"]), false);
        assert_eq!(polys(&r.basis).len(), 2);
        let r = compute(f(), &[0], &ideal(&["X", "X + Y"]), false);
        let p: Vec<String> = polys(&r.basis).iter().map(|p| p.to_string()).collect();
        assert_eq!(p, vec!["X", "Y"]);
        let r = compute(f(), &[0], &ideal(&["X*Z", "X*T", "Y*Z", "Y*T"]), false);
        assert_eq!(r.basis.len(), 4);
    }

    #[test]
    fn twisted_cubic_basis() {
        let r = compute(f(), &[0], &ideal(&["X*Z - Y^2", "Y*T - Z^2", "X*T - Y*Z"]), false);
        assert_eq!(r.basis.len(), 3);
        assert_eq!(r.minimal_inputs, vec![0, 1, 2]);
    }

    #[test]
    fn tracked_syzygies_vanish() {
        let inputs = ideal(&["X^2", "X*Y", "Y^2", "X^2 + X*Y"]);
        let r = compute(f(), &[0], &inputs, true);
        assert_eq!(r.minimal_inputs, vec![0, 1, 2]);
        let gens: Vec<Poly> = inputs.iter().map(|v| v.component(0)).collect();
        for s in &r.syzygies {
            assert!(s.dot(&gens).is_zero());
        }
        for (e, rep) in r.basis.elements().iter().zip(&r.reps) {
            assert_eq!(rep.dot(&gens), e.component(0));
        }
        // two linear syzygies plus the dependency of the last input
        assert!(r.syzygies.len() >= 3);
    }

    #[test]
    fn divide_reconstructs() {
        let r = compute(f(), &[0], &ideal(&["X*Z - Y*T", "Y^2"]), false);
        let v = Vector::from_poly(&parse_poly(f(), "X*Z*Y + Y^3 + T^3").unwrap(), 0);
        let (q, nf) = r.basis.divide(&v);
        let back = q.combine_columns(r.basis.elements()).add(&nf);
        assert_eq!(back, v);
        assert_eq!(nf.component(0).to_string(), "T^3");
    }
}
