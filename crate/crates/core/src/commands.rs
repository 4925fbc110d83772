//! The work behind each CLI subcommand. Every command yields a JSON report and
//! a status; errors are left to the caller, which maps them to exit code 2.

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde_json::{json, Value};

use crate::code::{CodeHandle, DEFAULT_CAP_LOG2};
use crate::eisenstein::{character_table, eisenstein_dual_code, EisensteinContext};
use crate::error::{Error, Result};
use crate::galois::GaloisContext;
use crate::idempotent::IdempotentSystem;
use crate::io::{elem_json, vector_json, CodeSpec};
use crate::oracle::{cross_check_eisenstein, cross_check_galois, OracleReport};
use crate::poly::{classify_cosets, RingPoly};
use crate::ring::{make_ring, ChainRing, RingParams};

/// Default `log_2` bound on `|R|^N` for `verify`.
pub const DEFAULT_VERIFY_CAP_LOG2: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    pub status: Status,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report, status: Status::Ok }
    }
}

fn resolved_params(ring: &ChainRing) -> RingParams {
    let mut params = ring.params().clone();
    params.f = Some(ring.omega_poly().to_vec());
    params
}

fn ratio(num: u32, den: u32) -> String {
    Rational64::new(num as i64, den as i64).to_string()
}

/// Sizes, chain lengths and the extension tower `Z_{p^n} ⊆ Z_{p^n}[ω], S ⊆ R`.
pub fn ring_info(params: &RingParams) -> Result<Outcome> {
    let ring = make_ring(params.clone())?;
    let (n, r, m) = (ring.n(), ring.rank(), ring.m());
    let edge = |upper: &str, lower: &str, num: u32, den: u32| json!({ "upper": upper, "lower": lower, "degree": ratio(num, den) });
    Ok(Outcome::ok(json!({
        "ring": resolved_params(&ring),
        "p": ring.p(),
        "n": n,
        "r": r,
        "k": ring.k(),
        "t": ring.t(),
        "m": m,
        "log_p_size": ring.log_size(),
        "log_p_base_size": m,
        "chain_lengths": { "R": m, "S": m, "Z[w]": n, "Z": n },
        "tower": [
            edge("R", "S", r * m, m),
            edge("R", "Z[w]", r * m, r * n),
            edge("S", "Z", m, n),
            edge("Z[w]", "Z", r * n, n),
        ],
        "relation": crate::eisenstein::non_free_relation(&ring).ok().flatten()
            .map(|(c, t)| json!({ "coefficient": c, "x_power": t })),
    })))
}

pub fn cosets(params: &RingParams, n: u64) -> Result<Outcome> {
    let ring = make_ring(params.clone())?;
    let cls = classify_cosets(n, ring.p(), ring.rank())?;
    Ok(Outcome::ok(serde_json::to_value(&cls).expect("serialisable")))
}

fn poly_json(ring: &ChainRing, coeffs: &[crate::ring::Elem]) -> Value {
    let poly = RingPoly::new(coeffs.to_vec());
    json!({ "text": poly.format(ring), "coeffs": vector_json(ring, coeffs) })
}

pub fn idempotents(params: &RingParams, n: u64) -> Result<Outcome> {
    let ring = make_ring(params.clone())?;
    let sys = IdempotentSystem::new(&ring, n)?;
    let cls = &sys.cls;
    let mut eps_split = BTreeMap::new();
    let mut m_polys = BTreeMap::new();
    for i in 0..=cls.v {
        m_polys.insert(format!("{i}"), poly_json(&ring, &sys.m_polys[i].coeffs));
        if i > cls.u {
            for h in 0..ring.rank() as usize {
                eps_split.insert(format!("{i},{h}"), poly_json(&ring, &sys.eps_split[i][h]));
                m_polys.insert(format!("{i},{h}"), poly_json(&ring, &sys.m_split[i][h].coeffs));
            }
        }
    }
    let mu_split: BTreeMap<String, String> = (cls.u + 1..=cls.v)
        .flat_map(|i| {
            sys.mu_split[i].iter().enumerate().map(move |(h, &(a, b))| (format!("{i},{h}"), format!("{a},{b}")))
        })
        .collect();
    Ok(Outcome::ok(json!({
        "N": n,
        "leaders": cls.leaders,
        "u": cls.u,
        "v": cls.v,
        "eps": (0..=cls.v).map(|i| poly_json(&ring, &sys.eps[i])).collect::<Vec<_>>(),
        "eps_split": eps_split,
        "mu_perm": sys.mu_perm,
        "mu_split": mu_split,
        "m_polys": m_polys,
    })))
}

fn check_ring(spec: &CodeSpec, ring: Option<&RingParams>) -> Result<ChainRing> {
    if let Some(given) = ring {
        let a = make_ring(given.clone())?;
        let b = make_ring(spec.ring().clone())?;
        if resolved_params(&a) != resolved_params(&b) {
            return Err(Error::ParameterInvalid("--ring does not match the ring inside the code spec".into()));
        }
    }
    make_ring(spec.ring().clone())
}

enum Built {
    Galois(GaloisContext, crate::galois::GaloisCodeSpec, CodeHandle),
    Eisenstein(EisensteinContext, crate::eisenstein::EisensteinCodeSpec, CodeHandle),
}

impl Built {
    fn code(&self) -> &CodeHandle {
        match self {
            Built::Galois(_, _, c) | Built::Eisenstein(_, _, c) => c,
        }
    }
}

fn build(spec: &CodeSpec, ring: Option<&RingParams>) -> Result<Built> {
    let ring = check_ring(spec, ring)?;
    match spec {
        CodeSpec::Galois(s) => {
            let ctx = GaloisContext::new(&ring, s.n)?;
            let code = ctx.build(s)?;
            Ok(Built::Galois(ctx, s.clone(), code))
        }
        CodeSpec::Eisenstein(s) => {
            let ctx = EisensteinContext::new(&ring, s.n)?;
            let code = ctx.build(s)?;
            Ok(Built::Eisenstein(ctx, s.clone(), code))
        }
    }
}

fn generators_json(code: &CodeHandle) -> Vec<Value> {
    let ring = code.ring();
    code.normal
        .basis()
        .into_iter()
        .map(|(row, order)| json!({ "vector": vector_json(ring, &code.space.unflatten(&row)), "order": order }))
        .collect()
}

fn min_weight_within(code: &CodeHandle, cap: u32) -> Value {
    match code.min_weight(cap) {
        Ok(w) => json!(w),
        Err(_) => Value::Null,
    }
}

pub fn code_build(spec: &CodeSpec, ring: Option<&RingParams>, cap: Option<u32>) -> Result<Outcome> {
    let built = build(spec, ring)?;
    let code = built.code();
    Ok(Outcome::ok(json!({
        "spec": spec,
        "log_p_card": code.log_p_card,
        "log_p_ambient": code.normal.ambient.log_order(),
        "generators": generators_json(code),
        "min_weight": min_weight_within(code, cap.unwrap_or(DEFAULT_CAP_LOG2)),
    })))
}

/// Closed-form dual with the counting identity asserted; status `Failed` if it does not hold.
pub fn code_dual(spec: &CodeSpec, ring: Option<&RingParams>) -> Result<Outcome> {
    let built = build(spec, ring)?;
    let code = built.code();
    let ambient = code.normal.ambient.log_order();
    let (dual_code, mut report) = match &built {
        Built::Galois(ctx, s, _) => {
            let dual_spec = ctx.dual(s)?;
            let dual_code = ctx.build(&dual_spec)?;
            let linear = ctx.trace_dual_linear(code)?;
            let formula = ctx.log_cardinality(&dual_spec)?;
            let report = json!({
                "dual_spec": CodeSpec::Galois(dual_spec),
                "dual_log_p_card_formula": formula,
                "matches_linear_dual": dual_code.same_code(&linear),
                "self_dual": code.same_code(&dual_code),
            });
            (dual_code, report)
        }
        Built::Eisenstein(..) => {
            let dual_code = eisenstein_dual_code(code)?;
            let report = json!({
                "dual_generators": generators_json(&dual_code),
                "self_dual": code.same_code(&dual_code),
            });
            (dual_code, report)
        }
    };
    let identity = code.log_p_card + dual_code.log_p_card == ambient;
    let linear_ok = report.get("matches_linear_dual").is_none_or(|v| v == &json!(true));
    let obj = report.as_object_mut().expect("object");
    obj.insert("spec".into(), serde_json::to_value(spec).expect("serialisable"));
    obj.insert("log_p_card".into(), json!(code.log_p_card));
    obj.insert("dual_log_p_card".into(), json!(dual_code.log_p_card));
    obj.insert("log_p_ambient".into(), json!(ambient));
    obj.insert("counting_identity".into(), json!(identity));
    let status = if identity && linear_ok { Status::Ok } else { Status::Failed };
    Ok(Outcome { report, status })
}

pub fn code_weights(spec: &CodeSpec, ring: Option<&RingParams>, cap: Option<u32>) -> Result<Outcome> {
    let built = build(spec, ring)?;
    let code = built.code();
    let weights = code.weight_enumerator(cap.unwrap_or(DEFAULT_CAP_LOG2))?;
    let min = weights.keys().copied().find(|&w| w > 0);
    Ok(Outcome::ok(json!({
        "spec": spec,
        "log_p_card": code.log_p_card,
        "weights": weights.iter().map(|(w, c)| (w.to_string(), *c)).collect::<BTreeMap<_, _>>(),
        "min_weight": min,
    })))
}

/// The exponent matrix `β(a, z)` with rows and columns in lexicographic grid order.
pub fn chars(params: &RingParams) -> Result<Outcome> {
    let ring = make_ring(params.clone())?;
    let (elems, table) = character_table(&ring)?;
    Ok(Outcome::ok(json!({
        "ring": resolved_params(&ring),
        "modulus": ring.modulus(),
        "elements": elems.iter().map(|a| elem_json(&ring, a)).collect::<Vec<_>>(),
        "labels": elems.iter().map(|a| ring.format(a)).collect::<Vec<_>>(),
        "table": table,
    })))
}

/// Runs the brute-force cross-check when `|R|^N <= 2^cap`.
pub fn verify(spec: &CodeSpec, ring: Option<&RingParams>, cap: Option<u32>) -> Result<Outcome> {
    let cap = cap.unwrap_or(DEFAULT_VERIFY_CAP_LOG2);
    let ring_obj = check_ring(spec, ring)?;
    let bits = ring_obj.log_size() as f64 * spec.length() as f64 * (ring_obj.p() as f64).log2();
    if bits > cap as f64 {
        return Err(Error::TooLarge(format!("|R|^N = 2^{bits:.1} exceeds the cap 2^{cap}")));
    }
    let report: OracleReport = match build(spec, ring)? {
        Built::Galois(ctx, s, _) => cross_check_galois(&ctx, &s)?,
        Built::Eisenstein(ctx, s, _) => cross_check_eisenstein(&ctx, &s)?,
    };
    let status = if report.passed() { Status::Ok } else { Status::Failed };
    Ok(Outcome { report: serde_json::to_value(&report).expect("serialisable"), status })
}
