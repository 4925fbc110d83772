//! Definition-level checks by exhaustive enumeration of `R^N`.
//!
//! Nothing here uses idempotents or normal forms: codes are taken as additive
//! closures of their generators, duals are computed by testing every vector of
//! the ambient space against the pairing.

use serde::Serialize;

use crate::code::{CodeHandle, Family};
use crate::eisenstein::{eisenstein_dual_code, pairing, EisensteinCodeSpec, EisensteinContext};
use crate::error::{Error, Result};
use crate::galois::{GaloisCodeSpec, GaloisContext};
use crate::idempotent::{mu_lemma_sides, Scalars};
use crate::ring::{ChainRing, Elem};

/// Largest ambient `|R|^N` the oracle enumerates.
pub const ORACLE_CAP: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Counterexample vectors as grids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub a: Vec<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Vec<Vec<u64>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub checked: String,
    /// `log_p |R^N|`.
    pub instance_size: u32,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Mixed-radix indexing of `R^N` in lexicographic order of the grids.
struct Space {
    ring: ChainRing,
    len: usize,
    moduli: Vec<u64>,
    size: usize,
}

impl Space {
    fn new(ring: &ChainRing, len: usize) -> Result<Self> {
        let ring_size = ring.size().unwrap_or(u64::MAX);
        let size = (0..len).try_fold(1u64, |acc, _| acc.checked_mul(ring_size)).unwrap_or(u64::MAX);
        if size > ORACLE_CAP {
            return Err(Error::TooLarge(format!("|R|^N = {size} exceeds the oracle cap 2^20")));
        }
        let moduli = (0..len).flat_map(|_| (0..ring.dim()).map(|i| ring.coord_modulus(i))).collect();
        Ok(Space { ring: ring.clone(), len, moduli, size: size as usize })
    }

    fn encode(&self, v: &[u64]) -> usize {
        v.iter().zip(&self.moduli).fold(0usize, |acc, (&c, &m)| acc * m as usize + c as usize)
    }

    fn decode(&self, mut idx: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.moduli.len()];
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = (idx % m as usize) as u64;
            idx /= m as usize;
        }
        out
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.moduli).map(|((&x, &y), &m)| (x + y) % m).collect()
    }

    fn flat(&self, v: &[Elem]) -> Vec<u64> {
        v.iter().flat_map(|e| e.coeffs().iter().copied()).collect()
    }

    fn vector(&self, idx: usize) -> Vec<Elem> {
        let flat = self.decode(idx);
        flat.chunks(self.ring.dim()).map(|c| self.ring.from_flat_reducing(c.to_vec())).collect()
    }

    fn grids(&self, idx: usize) -> Vec<Vec<Vec<u64>>> {
        self.vector(idx).iter().map(|e| self.ring.grid(e)).collect()
    }

    fn log_size(&self) -> u32 {
        self.len as u32 * self.ring.log_size()
    }

    /// Additive closure of `gens`, as a membership bitmap and member list.
    fn span(&self, gens: &[Vec<u64>]) -> (Vec<bool>, Vec<usize>) {
        let mut seen = vec![false; self.size];
        seen[0] = true;
        let mut members = vec![0usize];
        for g in gens {
            let mut multiples = Vec::new();
            let mut cur = g.clone();
            while cur.iter().any(|&c| c != 0) {
                multiples.push(cur.clone());
                cur = self.add(&cur, g);
            }
            let snapshot = members.clone();
            for &m in &snapshot {
                let base = self.decode(m);
                for mult in &multiples {
                    let s = self.encode(&self.add(&base, mult));
                    if !seen[s] {
                        seen[s] = true;
                        members.push(s);
                    }
                }
            }
        }
        (seen, members)
    }

    /// Keeps the vectors `a` whose pairing with every generator vanishes.
    /// `pair(e, c)` maps a ring element and a coordinate of a generator to a value
    /// vector whose coordinates reduce by `out_moduli`.
    fn brute_dual(&self, gens: &[Vec<Elem>], out_moduli: &[u64], pair: impl Fn(&Elem, &Elem) -> Vec<u64>) -> Vec<bool> {
        let ring = &self.ring;
        let ring_size = ring.size().unwrap() as usize;
        let elems: Vec<Elem> = (0..ring_size as u64).map(|i| ring.from_index(i)).collect();
        let mut alive = vec![true; self.size];
        for g in gens {
            let tables: Vec<Vec<Vec<u64>>> = g.iter().map(|gl| elems.iter().map(|e| pair(e, gl)).collect()).collect();
            for (idx, slot) in alive.iter_mut().enumerate() {
                if !*slot {
                    continue;
                }
                let mut acc = vec![0u64; out_moduli.len()];
                let mut rest = idx;
                for l in (0..self.len).rev() {
                    let e = rest % ring_size;
                    rest /= ring_size;
                    for (a, &v) in acc.iter_mut().zip(&tables[l][e]) {
                        *a += v;
                    }
                }
                if acc.iter().zip(out_moduli).any(|(&a, &m)| a % m != 0) {
                    *slot = false;
                }
            }
        }
        alive
    }
}

/// `{a ∈ R^N : Σ_l Tr(a_l b_l) = 0 for all b in the span of gens}` by enumeration.
pub fn brute_dual_trace(ring: &ChainRing, len: usize, gens: &[Vec<Elem>]) -> Result<Vec<Vec<Elem>>> {
    let space = Space::new(ring, len)?;
    let alive = trace_dual_bitmap(&space, gens);
    Ok(members_of(&space, &alive))
}

/// `{a ∈ R^N : Σ_l β(a_l, b_l) = 0 for all b in the span of gens}` by enumeration.
pub fn brute_dual_character(ring: &ChainRing, len: usize, gens: &[Vec<Elem>]) -> Result<Vec<Vec<Elem>>> {
    if ring.rank() != 1 {
        return Err(Error::RankNotOne(ring.rank()));
    }
    let space = Space::new(ring, len)?;
    let alive = character_dual_bitmap(&space, gens);
    Ok(members_of(&space, &alive))
}

fn trace_dual_bitmap(space: &Space, gens: &[Vec<Elem>]) -> Vec<bool> {
    let ring = &space.ring;
    let k = ring.k() as usize;
    let out: Vec<u64> = (0..k).map(|j| ring.coord_modulus(j)).collect();
    space.brute_dual(gens, &out, |e, c| ring.trace(&ring.mul(e, c)).coeffs()[..k].to_vec())
}

fn character_dual_bitmap(space: &Space, gens: &[Vec<Elem>]) -> Vec<bool> {
    let ring = &space.ring;
    space.brute_dual(gens, &[ring.modulus()], |e, c| vec![pairing(ring, e, c).expect("rank one")])
}

fn members_of(space: &Space, bitmap: &[bool]) -> Vec<Vec<Elem>> {
    bitmap.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| space.vector(i)).collect()
}

fn report(checked: impl Into<String>, size: u32, witness: Option<Witness>) -> OracleReport {
    OracleReport {
        checked: checked.into(),
        instance_size: size,
        verdict: if witness.is_some() { Verdict::Fail } else { Verdict::Pass },
        witness,
    }
}

/// Checks that an explicit set is closed under addition, the given scalars and the cyclic shift.
/// An empty input stands for `{0}`.
pub fn verify_additive_cyclic(
    ring: &ChainRing,
    len: usize,
    set: &[Vec<Elem>],
    scalars: Scalars,
) -> Result<OracleReport> {
    let space = Space::new(ring, len)?;
    let size = space.log_size();
    let mut member = vec![false; space.size];
    member[0] = true;
    for v in set {
        if v.len() != len {
            return Err(Error::LengthMismatch { expected: len, got: v.len() });
        }
        member[space.encode(&space.flat(v))] = true;
    }
    // greedy additive generators in lexicographic order
    let mut gens: Vec<Vec<u64>> = Vec::new();
    let (mut span, _) = space.span(&gens);
    for idx in (0..space.size).filter(|&i| member[i]) {
        if !span[idx] {
            gens.push(space.decode(idx));
            span = space.span(&gens).0;
        }
    }
    if let Some(bad) = (0..space.size).find(|&i| span[i] && !member[i]) {
        let w = Witness { a: space.grids(bad), b: None };
        return Ok(report("closure under addition", size, Some(w)));
    }
    let mults = scalars.multipliers(ring);
    for g in &gens {
        let v = space.vector(space.encode(g));
        let shifted = crate::code::cyclic_shift(&v);
        let idx = space.encode(&space.flat(&shifted));
        if !member[idx] {
            let w = Witness { a: space.grids(space.encode(g)), b: Some(space.grids(idx)) };
            return Ok(report("closure under the cyclic shift", size, Some(w)));
        }
        for s in &mults {
            let sv: Vec<Elem> = v.iter().map(|e| ring.mul(s, e)).collect();
            let idx = space.encode(&space.flat(&sv));
            if !member[idx] {
                let w = Witness { a: space.grids(space.encode(g)), b: Some(space.grids(idx)) };
                return Ok(report("closure under scalar multiplication", size, Some(w)));
            }
        }
    }
    Ok(report("additive, scalar-linear and cyclic", size, None))
}

/// Compares a closed-form dual against the enumerated dual of `code`, and checks
/// sizes, linearity, cyclicity, the double dual and the `μ` lemma on generator pairs.
pub fn cross_check_codes(
    code: &CodeHandle,
    closed_dual: &CodeHandle,
    expected_log: Option<u32>,
) -> Result<OracleReport> {
    let ring = code.ring();
    let space = Space::new(ring, code.len())?;
    let size = space.log_size();
    let p = ring.p() as usize;
    let gens: Vec<Vec<Elem>> = code.generators.rows.iter().map(|r| code.space.unflatten(r)).collect();
    let dual_gens: Vec<Vec<Elem>> = closed_dual.generators.rows.iter().map(|r| code.space.unflatten(r)).collect();
    let flat = |vs: &[Vec<Elem>]| vs.iter().map(|v| space.flat(v)).collect::<Vec<_>>();
    let (c_set, c_members) = space.span(&flat(&gens));
    let (d_set, d_members) = space.span(&flat(&dual_gens));

    if let Some(log) = expected_log {
        if c_members.len() != p.pow(log) {
            return Ok(report(
                format!("cardinality: enumerated {} words, formula gives p^{log}", c_members.len()),
                size,
                Some(Witness { a: space.grids(0), b: None }),
            ));
        }
    }
    let scalars = match code.family {
        Family::Galois => Scalars::Base,
        Family::Eisenstein => Scalars::Integers,
    };
    let members: Vec<Vec<Elem>> = c_members.iter().map(|&i| space.vector(i)).collect();
    let lin = verify_additive_cyclic(ring, code.len(), &members, scalars)?;
    if !lin.passed() {
        return Ok(OracleReport { checked: format!("code {}", lin.checked), ..lin });
    }

    let brute = match code.family {
        Family::Galois => trace_dual_bitmap(&space, &gens),
        Family::Eisenstein => character_dual_bitmap(&space, &gens),
    };
    if let Some(idx) = (0..space.size).find(|&i| brute[i] != d_set[i]) {
        let a = space.vector(idx);
        let b = gens
            .iter()
            .find(|g| !orthogonal(ring, code.family, &a, g))
            .map(|g| g.iter().map(|e| ring.grid(e)).collect());
        return Ok(report("closed-form dual equals enumerated dual", size, Some(Witness { a: space.grids(idx), b })));
    }
    if c_members.len() * d_members.len() != space.size {
        return Ok(report("counting identity |C||C^⊥| = |R^N|", size, Some(Witness { a: space.grids(0), b: None })));
    }
    let double = match code.family {
        Family::Galois => trace_dual_bitmap(&space, &dual_gens),
        Family::Eisenstein => character_dual_bitmap(&space, &dual_gens),
    };
    if let Some(idx) = (0..space.size).find(|&i| double[i] != c_set[i]) {
        return Ok(report("double dual equals the code", size, Some(Witness { a: space.grids(idx), b: None })));
    }
    for a in gens.iter().take(16) {
        for b in dual_gens.iter().take(16) {
            let (lhs, rhs) = mu_lemma_sides(ring, a, b);
            if lhs != rhs {
                let w = Witness {
                    a: a.iter().map(|e| ring.grid(e)).collect(),
                    b: Some(b.iter().map(|e| ring.grid(e)).collect()),
                };
                return Ok(report("a(X)μ(b(X)) = 0 iff all shifted products vanish", size, Some(w)));
            }
        }
    }
    Ok(report("cardinality, linearity, cyclicity, dual, counting identity, double dual, μ lemma", size, None))
}

fn orthogonal(ring: &ChainRing, family: Family, a: &[Elem], b: &[Elem]) -> bool {
    match family {
        Family::Galois => crate::galois::trace_inner_product(ring, a, b).map(|s| s.is_zero()).unwrap_or(false),
        Family::Eisenstein => {
            let q = ring.modulus();
            a.iter().zip(b).map(|(x, y)| pairing(ring, x, y).unwrap_or(1)).sum::<u64>() % q == 0
        }
    }
}

/// End-to-end check of a Galois-family spec against the given dual spec.
pub fn cross_check_galois_with_dual(
    ctx: &GaloisContext,
    spec: &GaloisCodeSpec,
    dual_spec: &GaloisCodeSpec,
) -> Result<OracleReport> {
    let code = ctx.build(spec)?;
    let dual = ctx.build(dual_spec)?;
    cross_check_codes(&code, &dual, Some(ctx.log_cardinality(spec)?))
}

pub fn cross_check_galois(ctx: &GaloisContext, spec: &GaloisCodeSpec) -> Result<OracleReport> {
    cross_check_galois_with_dual(ctx, spec, &ctx.dual(spec)?)
}

pub fn cross_check_eisenstein(ctx: &EisensteinContext, spec: &EisensteinCodeSpec) -> Result<OracleReport> {
    let code = ctx.build(spec)?;
    let dual = eisenstein_dual_code(&code)?;
    cross_check_codes(&code, &dual, Some(code.log_p_card))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ring, RingParams};

    #[test]
    fn shift_failure_has_witness() {
        let ring = make_ring(RingParams::new(2, 2, 1, 2, 1, vec![1, 0])).unwrap();
        let v = vec![ring.one(), ring.zero(), ring.zero()];
        let rep = verify_additive_cyclic(&ring, 3, &[v], Scalars::Integers).unwrap();
        assert_eq!(rep.verdict, Verdict::Fail);
        assert!(rep.witness.is_some());
        let rep = verify_additive_cyclic(&ring, 3, &[], Scalars::Base).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn trivial_duals() {
        let ring = make_ring(RingParams::new(2, 2, 1, 2, 1, vec![1, 0])).unwrap();
        assert_eq!(brute_dual_trace(&ring, 2, &[]).unwrap().len(), 64);
        let all: Vec<Vec<Elem>> = ring.elements().map(|e| vec![e]).collect();
        assert_eq!(brute_dual_character(&ring, 1, &all).unwrap(), vec![vec![ring.zero()]]);
        // S = Z_4 ↔ xS
        let dual = brute_dual_character(&ring, 1, &[vec![ring.one()]]).unwrap();
        assert_eq!(dual, vec![vec![ring.zero()], vec![ring.x()]]);
        assert!(matches!(brute_dual_trace(&ring, 8, &[]), Err(Error::TooLarge(_))));
    }
}
