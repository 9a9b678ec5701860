//! Serializable views of towers, codes, families, bounds and distance
//! results. Sets are always emitted in ascending order so that identical
//! inputs give byte-identical JSON.

use std::collections::BTreeMap;
use std::sync::Arc;

use constacyclic_core::bch::BchWitness;
use constacyclic_core::codes::{ConstacyclicCode, DefiningSet};
use constacyclic_core::distance::{DistanceResult, TraceStep, WeightEnumerator};
use constacyclic_core::families::{Bound, ClosedFormReport, Family, FamilyParams};
use constacyclic_core::galois::{prime_power, FieldSpec, Tower};
use constacyclic_core::poly::Poly;
use constacyclic_core::qadic::IndexUniverse;
use constacyclic_core::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerDto {
    pub p: u32,
    pub s: u32,
    pub m: u32,
    pub r: u64,
    /// Coefficients over `GF(p)`, constant term first, of the degree-`sm`
    /// primitive polynomial.
    pub modulus: Vec<u32>,
}

impl TowerDto {
    pub fn from_tower(t: &Tower) -> Self {
        let s = t.spec();
        TowerDto {
            p: s.p,
            s: s.s,
            m: s.m,
            r: s.r,
            modulus: t.modulus().to_vec(),
        }
    }

    pub fn to_tower(&self) -> Result<Tower> {
        Tower::new(FieldSpec::new(self.p, self.s, self.m, self.r)?, Some(&self.modulus))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDto {
    /// `GF(q)` labels, constant term first.
    pub labels: Vec<u32>,
    pub pretty: String,
}

impl PolyDto {
    pub fn new(f: &Poly, t: &Tower) -> Self {
        PolyDto {
            labels: f.to_labels(t).unwrap_or_default(),
            pretty: f.pretty(t),
        }
    }
}

/// Everything needed to rebuild a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeDescriptor {
    pub tower: TowerDto,
    /// `t` in `Ω^{(t)}`; the shift constant is `β^{n t}`.
    pub residue: u64,
    pub n: u64,
    pub k: u64,
    pub leaders: Vec<u64>,
    pub generator: PolyDto,
}

impl CodeDescriptor {
    pub fn from_code(c: &ConstacyclicCode) -> Self {
        let t = c.tower();
        CodeDescriptor {
            tower: TowerDto::from_tower(t),
            residue: c.residue(),
            n: c.n() as u64,
            k: c.k() as u64,
            leaders: c.defining_set().leaders(),
            generator: PolyDto::new(c.generator(), t),
        }
    }

    /// Rebuilds the code and checks that the stored generator and
    /// dimension agree with it.
    pub fn to_code(&self) -> Result<ConstacyclicCode> {
        let t = Arc::new(self.tower.to_tower()?);
        let spec = *t.spec();
        let u = Arc::new(IndexUniverse::new(t.q(), spec.m, spec.r, self.residue)?);
        let z = DefiningSet::from_leaders(u, &self.leaders)?;
        let c = ConstacyclicCode::from_defining_set(t.clone(), z)?;
        let g = Poly::from_labels(&self.generator.labels, &t)?;
        if &g != c.generator() || c.k() as u64 != self.k || c.n() as u64 != self.n {
            return Err(Error::BadParams(String::from(
                "descriptor generator or dimension disagrees with its defining set",
            )));
        }
        Ok(c)
    }
}

/// `{family, q, m, ell?, i?, selectors?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDescriptor {
    pub family: String,
    pub q: u64,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selectors: Option<Vec<u32>>,
}

impl FamilyDescriptor {
    pub fn from_params(p: &FamilyParams) -> Self {
        let mut d = FamilyDescriptor {
            family: String::new(),
            q: p.q,
            m: p.m,
            ell: None,
            i: None,
            selectors: None,
        };
        d.family = match &p.family {
            Family::Parity(i) => {
                d.i = Some(*i);
                "parity"
            }
            Family::QWeight(l) => {
                d.ell = Some(*l);
                "qweight"
            }
            Family::Cprm(l) => {
                d.ell = Some(*l);
                "cprm"
            }
            Family::S1 => "s1",
            Family::S2 => "s2",
            Family::S3(l) => {
                d.ell = Some(*l);
                "s3"
            }
            Family::S4(sel) => {
                d.selectors = Some(sel.clone());
                "s4"
            }
        }
        .to_string();
        d
    }

    pub fn to_params(&self) -> Result<FamilyParams> {
        let need = |v: Option<u32>, what: &str| {
            v.ok_or_else(|| Error::BadParams(format!("family {} needs --{what}", self.family)))
        };
        let family = match self.family.as_str() {
            "parity" => Family::Parity(need(self.i, "i")?),
            "qweight" => Family::QWeight(need(self.ell, "ell")?),
            "cprm" => Family::Cprm(need(self.ell, "ell")?),
            "s1" => Family::S1,
            "s2" => Family::S2,
            "s3" => Family::S3(need(self.ell, "ell")?),
            "s4" => Family::S4(
                self.selectors
                    .clone()
                    .ok_or_else(|| Error::BadParams(String::from("family s4 needs --selectors")))?,
            ),
            other => {
                return Err(Error::BadParams(format!(
                    "unknown family {other:?} (expected parity, qweight, cprm, s1, s2, s3 or s4)"
                )))
            }
        };
        FamilyParams::new(family, self.q, self.m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDto {
    pub b: i64,
    pub a: i64,
    pub h: i64,
    pub delta: u64,
    pub progression: Vec<u64>,
}

impl WitnessDto {
    pub fn new(w: &BchWitness, big_n: u64) -> Self {
        WitnessDto {
            b: w.b,
            a: w.a,
            h: w.h,
            delta: w.delta,
            progression: w.progression(big_n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundDto {
    pub rule: String,
    pub claimed: u64,
    pub certified: u64,
    pub witness: Option<WitnessDto>,
}

impl BoundDto {
    pub fn new(b: &Bound, big_n: u64) -> Self {
        BoundDto {
            rule: b.rule.clone(),
            claimed: b.claimed,
            certified: b.certified,
            witness: b.witness.as_ref().map(|w| WitnessDto::new(w, big_n)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDto {
    pub family: String,
    pub n: u64,
    pub dimension: u64,
    pub dual_dimension: u64,
    pub distance_lb: Option<BoundDto>,
    pub dual_distance_lb: Option<BoundDto>,
    pub cited_distance: Option<u64>,
    pub notes: Vec<String>,
}

impl ReportDto {
    pub fn new(r: &ClosedFormReport) -> Self {
        let big_n = r.params.big_n();
        ReportDto {
            family: r.params.tag(),
            n: r.n,
            dimension: r.dimension,
            dual_dimension: r.dual_dimension,
            distance_lb: r.distance.as_ref().map(|b| BoundDto::new(b, big_n)),
            dual_distance_lb: r.dual_distance.as_ref().map(|b| BoundDto::new(b, big_n)),
            cited_distance: r.cited_distance,
            notes: r.notes.clone(),
        }
    }
}

/// `{"counts": {"0": 1, "9": 1040, ...}}`, zero counts omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumeratorDto {
    pub counts: BTreeMap<u64, u64>,
}

impl EnumeratorDto {
    pub fn new(e: &WeightEnumerator) -> Self {
        EnumeratorDto {
            counts: e.terms().into_iter().map(|(w, c)| (w as u64, c)).collect(),
        }
    }

    pub fn to_enumerator(&self, n: usize) -> WeightEnumerator {
        let mut counts = vec![0; n + 1];
        for (&w, &c) in &self.counts {
            if let Some(slot) = counts.get_mut(w as usize) {
                *slot = c;
            }
        }
        WeightEnumerator { counts }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDto {
    pub method: String,
    pub cost: u64,
    pub lower: u64,
    pub upper: u64,
    pub detail: String,
}

impl TraceDto {
    pub fn new(s: &TraceStep) -> Self {
        TraceDto {
            method: s.method.name().to_string(),
            cost: s.cost,
            lower: s.lower,
            upper: s.upper,
            detail: s.detail.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceDto {
    pub n: u64,
    pub k: u64,
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    pub witness_codeword: Vec<u32>,
    pub method_trace: Vec<TraceDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_enumerator: Option<EnumeratorDto>,
}

impl DistanceDto {
    pub fn new(r: &DistanceResult) -> Self {
        DistanceDto {
            n: r.n,
            k: r.k,
            lower: r.lower,
            upper: r.upper,
            exact: r.exact,
            witness_codeword: r.witness.clone(),
            method_trace: r.trace.iter().map(TraceDto::new).collect(),
            weight_enumerator: r.enumerator.as_ref().map(EnumeratorDto::new),
        }
    }
}

/// `q = p^s` split, with a parameter error naming `q` otherwise.
pub fn split_q(q: u64) -> Result<(u32, u32)> {
    prime_power(q).ok_or_else(|| Error::BadParams(format!("q = {q} is not a prime power")))
}
