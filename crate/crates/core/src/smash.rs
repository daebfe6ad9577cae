//! Smash products of Hopf quasigroups and smash coproducts of Hopf
//! coquasigroups, the hypotheses they need, and seeded sweeps that test the
//! equivalence between existence of the structure and twisted associativity.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::actions::{
    coqm_algebra_laws, coqm_coalgebra_laws, map2, qm_algebra_laws, qm_coalgebra_laws, quasicomodule_laws,
    quasimodule_laws, ActionData, CoactionData,
};
use crate::catalog::{cyclic, direct_product, group_algebra, loop7, s3};
use crate::error::{Error, Result};
use crate::exactla::{FieldDesc, Matrix, Tensor3, Vector};
use crate::loops::LoopTable;
use crate::report::{check_laws, Law, VerificationReport};
use crate::structures::{
    dualize, hopf_coquasigroup_suite, hopf_quasigroup_suite, tensor2, Elem, Elem2, Elem3, HopfCoquasigroup, HopfData,
    HopfQuasigroup,
};

fn e(field: FieldDesc, i: usize) -> Elem {
    Elem::single(i, field.one())
}

/// `H` acting on the Hopf quasigroup `A`.
#[derive(Clone, Debug)]
pub struct SmashInput {
    pub h: HopfQuasigroup,
    pub a: HopfQuasigroup,
    pub act: ActionData,
}

impl SmashInput {
    pub fn new(h: HopfQuasigroup, a: HopfQuasigroup, act: ActionData) -> Result<Self> {
        if act.h_dim() != h.dim() || act.m_dim() != a.dim() {
            return Err(Error::dims(format!(
                "action {}x{} for dim H = {}, dim A = {}",
                act.h_dim(),
                act.m_dim(),
                h.dim(),
                a.dim()
            )));
        }
        Ok(SmashInput { h, a, act })
    }

    /// Quasimodule, quasimodule algebra and quasimodule coalgebra laws.
    pub fn validate(&self) -> VerificationReport {
        let (h, a, act) = (&*self.h, &*self.a, &self.act);
        let mut laws = quasimodule_laws(h, act);
        laws.extend(qm_algebra_laws(h, a.algebra(), act));
        laws.extend(qm_coalgebra_laws(h, a.coalgebra(), act));
        check_laws(&laws)
    }
}

/// `C` coacted on by the Hopf coquasigroup `H`.
#[derive(Clone, Debug)]
pub struct CosmashInput {
    pub h: HopfCoquasigroup,
    pub c: HopfCoquasigroup,
    pub coact: CoactionData,
}

impl CosmashInput {
    pub fn new(h: HopfCoquasigroup, c: HopfCoquasigroup, coact: CoactionData) -> Result<Self> {
        if coact.h_dim() != h.dim() || coact.m_dim() != c.dim() {
            return Err(Error::dims(format!(
                "coaction {}x{} for dim C = {}, dim H = {}",
                coact.m_dim(),
                coact.h_dim(),
                c.dim(),
                h.dim()
            )));
        }
        Ok(CosmashInput { h, c, coact })
    }

    /// Quasicomodule, quasicomodule algebra and quasicomodule coalgebra laws.
    pub fn validate(&self) -> VerificationReport {
        let (h, c, co) = (&*self.h, &*self.c, &self.coact);
        let mut laws = quasicomodule_laws(h, co);
        laws.extend(coqm_algebra_laws(h, c.algebra(), co));
        laws.extend(coqm_coalgebra_laws(h, c.coalgebra(), co));
        check_laws(&laws)
    }
}

// ---------------------------------------------------------------------------
// smash product

/// `h_(1) ⊗ h_(2)·a = h_(2) ⊗ h_(1)·a`
pub fn check_cocommu(input: &SmashInput) -> VerificationReport {
    let (h, act) = (&*input.h, &input.act);
    let law = Law::new("cocommu", vec![h.dim(), act.m_dim()], move |i| {
        let mut lhs = Elem2::new();
        let mut rhs = Elem2::new();
        for (&(x, y), c) in h.delta_basis(i[0]).iter() {
            lhs.add_scaled(&tensor2(&e(h.field(), x), act.act_basis(y, i[1])), c);
            rhs.add_scaled(&tensor2(&e(h.field(), y), act.act_basis(x, i[1])), c);
        }
        (lhs, rhs)
    });
    check_laws(&[law])
}

/// `g·(S(h)·a) = (gS(h))·a`, plus the plain law `g·(h·a) = (gh)·a` as an
/// informational entry.
pub fn check_modass(input: &SmashInput) -> VerificationReport {
    let (h, act) = (&*input.h, &input.act);
    let (n, d) = (h.dim(), act.m_dim());
    let f = h.field();
    let laws = vec![
        Law::new("modass", vec![n, n, d], move |i| {
            let lhs = act.act_on(i[0], &act.act(h.s_basis(i[1]), &e(f, i[2])));
            let rhs = act.act(&h.mul(&e(f, i[0]), h.s_basis(i[1])), &e(f, i[2]));
            (lhs, rhs)
        }),
        Law::new("modass.plain", vec![n, n, d], move |i| {
            let lhs = act.act_on(i[0], act.act_basis(i[1], i[2]));
            let rhs = act.act(h.mul_basis(i[0], i[1]), &e(f, i[2]));
            (lhs, rhs)
        })
        .informational(),
    ];
    check_laws(&laws)
}

/// The candidate on `A ⊗ H` (basis `a·dim H + h`) with twisted product and
/// antipode; tensor-product unit, coproduct and counit. Not validated.
pub fn build_smash_product(input: &SmashInput) -> Result<HopfQuasigroup> {
    let report = input.validate();
    if !report.all_pass() {
        return Err(Error::InvalidInput(Box::new(report)));
    }
    Ok(HopfQuasigroup::new(smash_product_unchecked(input)))
}

fn smash_product_unchecked(input: &SmashInput) -> HopfData {
    let (h, a, act) = (&*input.h, &*input.a, &input.act);
    let (nh, na, f) = (h.dim(), a.dim(), h.field());
    let n = na * nh;
    let idx = |x: usize, y: usize| x * nh + y;
    let mut mu = Tensor3::zeros(f, n, n, n);
    let mut delta = Tensor3::zeros(f, n, n, n);
    let mut s = Matrix::zeros(f, n, n);
    let mut unit = Vector::zeros(f, n);
    let mut counit = Vector::zeros(f, n);
    for (&x, c) in a.one().iter() {
        for (&y, d) in h.one().iter() {
            unit.set(idx(x, y), c * d);
        }
    }
    for x in 0..na {
        for y in 0..nh {
            let p = idx(x, y);
            counit.set(p, a.eps_basis(x) * h.eps_basis(y));
            for (&(x1, x2), c) in a.delta_basis(x).iter() {
                for (&(y1, y2), d) in h.delta_basis(y).iter() {
                    let v = c * d;
                    let (q, r) = (idx(x1, y1), idx(x2, y2));
                    let old = delta.get(p, q, r).clone();
                    delta.set(p, q, r, &old + &v);
                }
            }
            // S(a ⊗ h) = S(h_(2))·S(a) ⊗ S(h_(1))
            let mut img = Elem2::new();
            for (&(y1, y2), c) in h.delta_basis(y).iter() {
                let left = act.act(h.s_basis(y2), a.s_basis(x));
                img.add_scaled(&tensor2(&left, h.s_basis(y1)), c);
            }
            for (&(u, v), c) in img.iter() {
                s.set(idx(u, v), p, c.clone());
            }
            // (a ⊗ h)(b ⊗ g) = a(h_(1)·b) ⊗ h_(2)g
            for xb in 0..na {
                for yg in 0..nh {
                    let mut prod = Elem2::new();
                    for (&(y1, y2), c) in h.delta_basis(y).iter() {
                        let left = a.mul(&e(f, x), act.act_basis(y1, xb));
                        prod.add_scaled(&tensor2(&left, h.mul_basis(y2, yg)), c);
                    }
                    let q = idx(xb, yg);
                    for (&(u, v), c) in prod.iter() {
                        mu.set(p, q, idx(u, v), c.clone());
                    }
                }
            }
        }
    }
    HopfData::from_tensors(mu, unit, delta, counit, s).expect("dimensions agree by construction")
}

/// Both halves of the equivalence with their evidence.
#[derive(Clone, Debug)]
pub struct RoundtripReport {
    /// The built candidate passes the full suite.
    pub p: bool,
    /// The twisted associativity law holds.
    pub q: bool,
    pub antipode_bijective: bool,
    pub hypotheses: VerificationReport,
    pub suite: VerificationReport,
    pub condition: VerificationReport,
}

impl RoundtripReport {
    pub fn consistent(&self) -> bool {
        self.p == self.q
    }
}

/// Checks the standing hypotheses, builds the candidate, and compares the
/// suite verdict with the twisted associativity law.
pub fn theorem_smash_roundtrip(input: &SmashInput) -> Result<RoundtripReport> {
    let mut hypotheses = check_cocommu(input);
    hypotheses.extend(input.validate());
    if !hypotheses.all_pass() {
        return Err(Error::HypothesisNotMet(Box::new(hypotheses)));
    }
    let built = HopfQuasigroup::new(smash_product_unchecked(input));
    let suite = hopf_quasigroup_suite(&built);
    let condition = check_modass(input);
    Ok(RoundtripReport {
        p: suite.all_pass(),
        q: condition.passed("modass"),
        antipode_bijective: input.h.antipode_is_bijective(),
        hypotheses,
        suite,
        condition,
    })
}

// ---------------------------------------------------------------------------
// smash coproduct

/// `c^(0) ⊗ c^(1)h = c^(0) ⊗ hc^(1)`
pub fn check_commu(input: &CosmashInput) -> VerificationReport {
    let (h, co) = (&*input.h, &input.coact);
    let f = h.field();
    let law = Law::new("commu", vec![co.m_dim(), h.dim()], move |i| {
        let lhs = map2(co.coact_basis(i[0]), |c0, c1| tensor2(&e(f, c0), h.mul_basis(c1, i[1])));
        let rhs = map2(co.coact_basis(i[0]), |c0, c1| tensor2(&e(f, c0), h.mul_basis(i[1], c1)));
        (lhs, rhs)
    });
    check_laws(&[law])
}

/// `c^(0)(0) ⊗ S(c^(0)(1)) ⊗ c^(1) = c^(0) ⊗ S(c^(1)_(1)) ⊗ c^(1)_(2)`, plus
/// plain coassociativity of the coaction as an informational entry.
pub fn check_comodcoass(input: &CosmashInput) -> VerificationReport {
    let (h, co) = (&*input.h, &input.coact);
    let d = co.m_dim();
    // c^(0)(0) ⊗ t(c^(0)(1)) ⊗ c^(1)  and  c^(0) ⊗ t(c^(1)_(1)) ⊗ c^(1)_(2)
    let sides = move |c: usize, t: &dyn Fn(usize) -> Elem| {
        let mut lhs = Elem3::new();
        let mut rhs = Elem3::new();
        for (&(c0, c1), s) in co.coact_basis(c).iter() {
            for (&(c00, c01), u) in co.coact_basis(c0).iter() {
                let v = s * u;
                for (&k, w) in t(c01).iter() {
                    lhs.add_term((c00, k, c1), &v * w);
                }
            }
            for (&(x, y), u) in h.delta_basis(c1).iter() {
                let v = s * u;
                for (&k, w) in t(x).iter() {
                    rhs.add_term((c0, k, y), &v * w);
                }
            }
        }
        (lhs, rhs)
    };
    let f = h.field();
    let laws = vec![
        Law::new("comodcoass", vec![d], move |i| sides(i[0], &|x| h.s_basis(x).clone())),
        Law::new("comodcoass.plain", vec![d], move |i| sides(i[0], &|x| e(f, x))).informational(),
    ];
    check_laws(&laws)
}

/// The candidate on `H ⊗ C` (basis `h·dim C + c`) with tensor-product
/// algebra and counit and the twisted coproduct and antipode. Not validated.
pub fn build_smash_coproduct(input: &CosmashInput) -> Result<HopfCoquasigroup> {
    let report = input.validate();
    if !report.all_pass() {
        return Err(Error::InvalidInput(Box::new(report)));
    }
    Ok(HopfCoquasigroup::new(smash_coproduct_unchecked(input)))
}

fn smash_coproduct_unchecked(input: &CosmashInput) -> HopfData {
    let (h, c, co) = (&*input.h, &*input.c, &input.coact);
    let (nh, nc, f) = (h.dim(), c.dim(), h.field());
    let n = nh * nc;
    let idx = |x: usize, y: usize| x * nc + y;
    let mut mu = Tensor3::zeros(f, n, n, n);
    let mut delta = Tensor3::zeros(f, n, n, n);
    let mut s = Matrix::zeros(f, n, n);
    let mut unit = Vector::zeros(f, n);
    let mut counit = Vector::zeros(f, n);
    for (&x, a) in h.one().iter() {
        for (&y, b) in c.one().iter() {
            unit.set(idx(x, y), a * b);
        }
    }
    for x in 0..nh {
        for y in 0..nc {
            let p = idx(x, y);
            counit.set(p, h.eps_basis(x) * c.eps_basis(y));
            for x2 in 0..nh {
                for y2 in 0..nc {
                    let q = idx(x2, y2);
                    for (&u, a) in h.mul_basis(x, x2).iter() {
                        for (&v, b) in c.mul_basis(y, y2).iter() {
                            mu.set(p, q, idx(u, v), a * b);
                        }
                    }
                }
            }
            // Δ(h ⊗ c) = h_(1) ⊗ c_(1)^(0) ⊗ h_(2) c_(1)^(1) ⊗ c_(2)
            let mut img = Elem2::new();
            for (&(h1, h2), a) in h.delta_basis(x).iter() {
                for (&(c1, c2), b) in c.delta_basis(y).iter() {
                    let ab = a * b;
                    for (&(c10, c11), g) in co.coact_basis(c1).iter() {
                        let v = &ab * g;
                        for (&k, w) in h.mul_basis(h2, c11).iter() {
                            img.add_term((idx(h1, c10), idx(k, c2)), &v * w);
                        }
                    }
                }
            }
            for (&(q, r), v) in img.iter() {
                delta.set(p, q, r, v.clone());
            }
            // S(h ⊗ c) = S(h c^(1)) ⊗ S(c^(0))
            let mut simg = Elem2::new();
            for (&(c0, c1), a) in co.coact_basis(y).iter() {
                let left = h.s(h.mul_basis(x, c1));
                simg.add_scaled(&tensor2(&left, c.s_basis(c0)), a);
            }
            for (&(u, v), a) in simg.iter() {
                s.set(idx(u, v), p, a.clone());
            }
        }
    }
    HopfData::from_tensors(mu, unit, delta, counit, s).expect("dimensions agree by construction")
}

pub fn theorem_cosmash_roundtrip(input: &CosmashInput) -> Result<RoundtripReport> {
    let mut hypotheses = check_commu(input);
    hypotheses.extend(input.validate());
    if !hypotheses.all_pass() {
        return Err(Error::HypothesisNotMet(Box::new(hypotheses)));
    }
    let built = HopfCoquasigroup::new(smash_coproduct_unchecked(input));
    let suite = hopf_coquasigroup_suite(&built);
    let condition = check_comodcoass(input);
    Ok(RoundtripReport {
        p: suite.all_pass(),
        q: condition.passed("comodcoass"),
        antipode_bijective: input.h.antipode_is_bijective(),
        hypotheses,
        suite,
        condition,
    })
}

// ---------------------------------------------------------------------------
// seeded sweeps

/// Seed used by the acceptance sweeps and the CLI default.
pub const DEFAULT_SEED: u64 = 0x5EED_2016;

/// `x · e_a = e_{phi[x][a]}`
pub fn permutation_action(field: FieldDesc, phi: &[Vec<usize>]) -> ActionData {
    let m = phi.first().map_or(0, Vec::len);
    ActionData::from_basis_map(field, phi.len(), m, |x, a| phi[x][a])
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j] = i;
    }
    out
}

/// A map `L → Aut(L')` sending `e` to the identity and inverses to inverses.
/// With `homomorphism` set, only homomorphisms are drawn (found by
/// rejection, falling back to the trivial map).
fn random_phi(rng: &mut ChaCha8Rng, l: &LoopTable, auts: &[Vec<usize>], homomorphism: bool) -> Vec<Vec<usize>> {
    let n = l.order();
    let id = auts[0].clone();
    let draw = |rng: &mut ChaCha8Rng| {
        let mut phi: Vec<Option<Vec<usize>>> = vec![None; n];
        phi[0] = Some(id.clone());
        for x in 1..n {
            if phi[x].is_some() {
                continue;
            }
            let xi = l.inverse(x).expect("IP loop");
            let p = auts.choose(rng).expect("nonempty").clone();
            if xi == x {
                // self-inverse elements need an involutive image
                let q = if compose(&p, &p) == id { p } else { id.clone() };
                phi[x] = Some(q);
            } else {
                phi[xi] = Some(invert(&p));
                phi[x] = Some(p);
            }
        }
        phi.into_iter().map(|p| p.expect("assigned")).collect::<Vec<_>>()
    };
    let is_hom = |phi: &[Vec<usize>]| (0..n).all(|x| (0..n).all(|y| phi[l.mul(x, y)] == compose(&phi[x], &phi[y])));
    if !homomorphism {
        return draw(rng);
    }
    for _ in 0..64 {
        let phi = draw(rng);
        if is_hom(&phi) {
            return phi;
        }
    }
    vec![id; n]
}

struct Pool {
    loops: Vec<LoopTable>,
    groups: Vec<LoopTable>,
}

fn pool() -> Pool {
    let c2 = cyclic(2);
    Pool {
        loops: vec![c2.clone(), cyclic(3), cyclic(4), s3(), direct_product(&c2, &c2), loop7()],
        groups: vec![cyclic(3), cyclic(4), cyclic(5), s3(), direct_product(&c2, &c2)],
    }
}

/// `count` hypothesis-satisfying smash inputs: `H = kL` for an IP loop `L`
/// acting on `A = kL'` through a map into `Aut(L')`. About half use a
/// homomorphism.
pub fn random_smash_inputs(seed: u64, count: usize, field: FieldDesc) -> Vec<SmashInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = pool();
    let mut targets = pool.groups.clone();
    targets.push(loop7());
    (0..count)
        .map(|_| {
            let l = pool.loops.choose(&mut rng).expect("nonempty");
            let t = targets.choose(&mut rng).expect("nonempty");
            if l.order() * t.order() > 36 {
                // keep the built candidate small
                return smash_instance(&mut rng, &cyclic(2), t, field);
            }
            smash_instance(&mut rng, l, t, field)
        })
        .collect()
}

fn smash_instance(rng: &mut ChaCha8Rng, l: &LoopTable, t: &LoopTable, field: FieldDesc) -> SmashInput {
    let auts = t.automorphisms();
    let hom = rng.gen_bool(0.5);
    let phi = random_phi(rng, l, &auts, hom);
    let h = group_algebra(l, field);
    let a = group_algebra(t, field);
    SmashInput::new(h, a, permutation_action(field, &phi)).expect("dims agree")
}

/// `count` hypothesis-satisfying cosmash inputs: `H = k^L` coacting on `C`
/// (a group algebra or functions on a loop) by transposing a map
/// `L → Aut(C)`.
pub fn random_cosmash_inputs(seed: u64, count: usize, field: FieldDesc) -> Vec<CosmashInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = pool();
    (0..count)
        .map(|_| {
            let l = pool.loops.choose(&mut rng).expect("nonempty");
            let functions = rng.gen_bool(0.4);
            let t = if functions {
                pool.loops.choose(&mut rng).expect("nonempty")
            } else {
                pool.groups.choose(&mut rng).expect("nonempty")
            };
            let l = if l.order() * t.order() > 36 { cyclic(2) } else { l.clone() };
            let auts = t.automorphisms();
            let hom = rng.gen_bool(0.5);
            let phi = random_phi(&mut rng, &l, &auts, hom);
            let h = dualize(&group_algebra(&l, field));
            let kt = group_algebra(t, field);
            let c = if functions { dualize(&kt) } else { HopfCoquasigroup::new((*kt).clone()) };
            let coact = CoactionData::from_action(&permutation_action(field, &phi));
            CosmashInput::new(h, c, coact).expect("dims agree")
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub total: usize,
    pub hypothesis_failures: usize,
    pub p_and_q: usize,
    pub neither: usize,
    /// Indices where `p` and `q` disagree.
    pub discrepancies: Vec<usize>,
}

fn summarize(results: Vec<Result<RoundtripReport>>) -> SweepSummary {
    let mut s = SweepSummary { total: results.len(), ..Default::default() };
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(r) if !r.consistent() => s.discrepancies.push(i),
            Ok(r) if r.p => s.p_and_q += 1,
            Ok(_) => s.neither += 1,
            Err(_) => s.hypothesis_failures += 1,
        }
    }
    s
}

pub fn sweep_smash(seed: u64, count: usize, field: FieldDesc) -> SweepSummary {
    let inputs = random_smash_inputs(seed, count, field);
    summarize(inputs.par_iter().map(theorem_smash_roundtrip).collect())
}

pub fn sweep_cosmash(seed: u64, count: usize, field: FieldDesc) -> SweepSummary {
    let inputs = random_cosmash_inputs(seed, count, field);
    summarize(inputs.par_iter().map(theorem_cosmash_roundtrip).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{function_algebra, s3_index};
    use crate::structures::{check_coq_identities, check_quasi_identities, tensor_product};

    const Q: FieldDesc = FieldDesc::Rationals;

    fn inversion_input() -> SmashInput {
        let h = group_algebra(&cyclic(2), Q);
        let a = group_algebra(&cyclic(3), Q);
        let act = permutation_action(Q, &[vec![0, 1, 2], vec![0, 2, 1]]);
        SmashInput::new(h, a, act).unwrap()
    }

    fn first_violating_smash() -> SmashInput {
        random_smash_inputs(DEFAULT_SEED, 60, Q)
            .into_iter()
            .find(|i| !check_modass(i).passed("modass"))
            .expect("the seeded sweep contains violations")
    }

    #[test]
    fn trivial_action_gives_tensor_product() {
        let h = group_algebra(&s3(), Q);
        let a = group_algebra(&cyclic(3), Q);
        let input = SmashInput::new(h.clone(), a.clone(), ActionData::trivial(&h, 3)).unwrap();
        let built = build_smash_product(&input).unwrap();
        assert!(built.same_tensors(&tensor_product(&a, &h).unwrap()));
        let r = theorem_smash_roundtrip(&input).unwrap();
        assert!(r.p && r.q && r.consistent());
    }

    #[test]
    fn inversion_smash_recovers_s3() {
        let built = build_smash_product(&inversion_input()).unwrap();
        let perm: Vec<usize> = (0..6).map(|p| s3_index(p / 2, p % 2)).collect();
        let s3_alg = group_algebra(&s3(), Q);
        assert!(built.relabel(&perm).same_tensors(&s3_alg));
        assert!(hopf_quasigroup_suite(&built).all_pass());
        let r = theorem_smash_roundtrip(&inversion_input()).unwrap();
        assert!(r.p && r.q);
        assert!(r.condition.passed("modass.plain"));
    }

    #[test]
    fn loop_smash_with_trivial_action() {
        let h = group_algebra(&loop7(), Q);
        let input = SmashInput::new(h.clone(), h.clone(), ActionData::trivial(&h, 7)).unwrap();
        let built = build_smash_product(&input).unwrap();
        assert_eq!(built.dim(), 49);
        assert!(check_quasi_identities(&built).all_pass());
    }

    #[test]
    fn loop_self_action_violates_modass() {
        let h = group_algebra(&loop7(), Q);
        let input = SmashInput::new(h.clone(), h.clone(), ActionData::regular(&h)).unwrap();
        let r = check_modass(&input);
        let w = r.entry("modass").unwrap().witness.clone().unwrap();
        assert_eq!(w.index.len(), 3);
        assert!(!r.passed("modass.plain"));
        // the regular action does not respect products, so the theorem does not apply
        assert!(matches!(theorem_smash_roundtrip(&input), Err(Error::HypothesisNotMet(_))));
        assert!(matches!(build_smash_product(&input), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn cocommu_examples() {
        let c3 = group_algebra(&cyclic(3), Q);
        let abelian_dual = HopfQuasigroup::new((*function_algebra(&cyclic(3), Q)).clone());
        let input = SmashInput::new(abelian_dual.clone(), c3.clone(), ActionData::from_fn(Q, 3, 3, |x, a| {
            if x == a { Elem::single(a, Q.one()) } else { Elem::new() }
        }))
        .unwrap();
        assert!(check_cocommu(&input).all_pass());
        let s3_dual = HopfQuasigroup::new((*function_algebra(&s3(), Q)).clone());
        let faithful = ActionData::regular(&s3_dual);
        let input = SmashInput::new(s3_dual.clone(), s3_dual, faithful).unwrap();
        let r = check_cocommu(&input);
        assert!(r.entry("cocommu").unwrap().witness.is_some());
        assert!(matches!(theorem_smash_roundtrip(&input), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn violating_instance_fails_second_quasi_identity() {
        let input = first_violating_smash();
        let r = theorem_smash_roundtrip(&input).unwrap();
        assert!(!r.q && !r.p);
        let failed = r.suite.failed_ids();
        assert!(failed.iter().any(|id| id.starts_with("quasi2")), "{failed:?}");
        assert!(!failed.iter().any(|id| id.starts_with("quasi1")), "{failed:?}");
    }

    #[test]
    fn smash_sweep_is_consistent() {
        let s = sweep_smash(DEFAULT_SEED, 30, Q);
        assert_eq!(s.hypothesis_failures, 0);
        assert!(s.discrepancies.is_empty());
        assert!(s.p_and_q > 0 && s.neither > 0);
    }

    #[test]
    fn sweep_is_deterministic() {
        assert_eq!(sweep_smash(11, 8, Q), sweep_smash(11, 8, Q));
    }

    fn transposed_inversion() -> CosmashInput {
        let h = function_algebra(&cyclic(2), Q);
        let c = HopfCoquasigroup::new((*group_algebra(&cyclic(3), Q)).clone());
        let coact = CoactionData::from_action(&permutation_action(Q, &[vec![0, 1, 2], vec![0, 2, 1]]));
        CosmashInput::new(h, c, coact).unwrap()
    }

    #[test]
    fn trivial_coaction_gives_tensor_product() {
        let h = function_algebra(&s3(), Q);
        let c = function_algebra(&loop7(), Q);
        let input = CosmashInput::new(h.clone(), c.clone(), CoactionData::trivial(&h, 7)).unwrap();
        let built = build_smash_coproduct(&input).unwrap();
        assert!(built.same_tensors(&tensor_product(&h, &c).unwrap()));
        let r = theorem_cosmash_roundtrip(&input).unwrap();
        assert!(r.p && r.q);
    }

    #[test]
    fn commu_examples() {
        let c3 = HopfCoquasigroup::new((*group_algebra(&cyclic(3), Q)).clone());
        let one = HopfCoquasigroup::new((*group_algebra(&cyclic(1), Q)).clone());
        let input = CosmashInput::new(c3, one.clone(), CoactionData::graded(Q, 3, &[2])).unwrap();
        assert!(check_commu(&input).all_pass());
        assert!(check_comodcoass(&input).all_pass());
        let g = HopfCoquasigroup::new((*group_algebra(&s3(), Q)).clone());
        let input = CosmashInput::new(g, one, CoactionData::graded(Q, 6, &[s3_index(0, 1)])).unwrap();
        let r = check_commu(&input);
        assert!(r.entry("commu").unwrap().witness.is_some());
        assert!(matches!(theorem_cosmash_roundtrip(&input), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn transposed_inversion_coproduct() {
        let input = transposed_inversion();
        let built = build_smash_coproduct(&input).unwrap();
        assert_eq!(built.dim(), 6);
        assert!(check_coq_identities(&built).all_pass());
        let r = theorem_cosmash_roundtrip(&input).unwrap();
        assert!(r.p && r.q);
    }

    #[test]
    fn cosmash_violation_breaks_coq() {
        let input = random_cosmash_inputs(DEFAULT_SEED, 60, Q)
            .into_iter()
            .find(|i| !check_comodcoass(i).passed("comodcoass"))
            .expect("the seeded sweep contains violations");
        let r = theorem_cosmash_roundtrip(&input).unwrap();
        assert!(!r.p && !r.q);
        assert!(r.suite.failed_ids().iter().any(|id| id.starts_with("coq")));
        // bad coactions are rejected by the builder
        let c = HopfCoquasigroup::new((*group_algebra(&cyclic(3), Q)).clone());
        let bad = CosmashInput::new(input.h.clone(), c, CoactionData::graded(Q, input.h.dim(), &[0, 1, 1])).unwrap();
        assert!(matches!(build_smash_coproduct(&bad), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn cosmash_sweep_is_consistent() {
        let s = sweep_cosmash(DEFAULT_SEED, 20, Q);
        assert_eq!(s.hypothesis_failures, 0);
        assert!(s.discrepancies.is_empty());
    }

    #[test]
    fn small_violations_exist() {
        let smash = random_smash_inputs(DEFAULT_SEED, 120, Q)
            .into_iter()
            .filter(|i| !check_modass(i).passed("modass"))
            .map(|i| i.h.dim() * i.a.dim())
            .min();
        assert_eq!(smash, Some(9));
        let cosmash = random_cosmash_inputs(DEFAULT_SEED, 120, Q)
            .into_iter()
            .filter(|i| !check_comodcoass(i).passed("comodcoass"))
            .map(|i| i.h.dim() * i.c.dim())
            .min();
        assert_eq!(cosmash, Some(12));
    }
}
