//! JSON instance files (`"schema": 1`).
//!
//! ```json
//! {"schema": 1, "universe": ["a","b","c"], "C": ["a","b","c"], "A": ["a"],
//!  "points": {"B1": ["a","b"], "B2": ["a","c"]}, "subfamily": ["B1","B2"]}
//! {"schema": 1, "ring": {"zmod": 12}, "ideal": 6}
//! {"schema": 1, "ring": {"tables": {"add": [[..]], "mul": [[..]]}}, "ideal": [0, 4, 8]}
//! {"schema": 1, "zr": {"pool": [2,3,5], "target": [2,3,5], "C": [], "members": [[2],[3],[5]]}}
//! ```
//!
//! Unknown fields are rejected. `subfamily` and `ideal` are optional.

use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{Map, Value};

use crate::bits::PointSet;
use crate::error::{Error, Result};
use crate::family::{ContextTriple, PointFamily};
use crate::rings::{FiniteRing, RingIdeal};
use crate::zr::{encode, OverringSpec, PrimePool};
use crate::Caps;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone)]
pub enum Instance {
    SetSystem {
        family: PointFamily,
        subfamily: Option<PointSet>,
    },
    Ring {
        ring: FiniteRing,
        ideal: Option<RingIdeal>,
    },
    Zr(ZrInstance),
}

#[derive(Debug, Clone)]
pub struct ZrInstance {
    pub pool: PrimePool,
    pub target: OverringSpec,
    pub c: OverringSpec,
    pub members: Vec<OverringSpec>,
}

impl ZrInstance {
    /// The encoded family; fails with a `1/p` witness when the ring identity fails.
    pub fn encode(&self) -> Result<PointFamily> {
        encode(&self.pool, &self.target, &self.c, &self.members)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SetSystemJson {
    #[allow(dead_code)]
    schema: u64,
    universe: Vec<String>,
    #[serde(rename = "C")]
    c: Vec<String>,
    #[serde(rename = "A")]
    a: Vec<String>,
    points: Map<String, Value>,
    #[serde(default)]
    subfamily: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingJson {
    #[allow(dead_code)]
    schema: u64,
    ring: RingSpecJson,
    #[serde(default)]
    ideal: Option<IdealJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, rename_all = "lowercase")]
enum RingSpecJson {
    Zmod(u64),
    Tables(TablesJson),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TablesJson {
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

/// A generator (`6`) or an element list (`[0, 4, 8]`).
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum IdealJson {
    Generator(u64),
    Elements(Vec<u64>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ZrJson {
    #[allow(dead_code)]
    schema: u64,
    zr: ZrSpecJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ZrSpecJson {
    pool: Vec<u64>,
    target: Vec<u64>,
    #[serde(rename = "C")]
    c: Vec<u64>,
    members: Vec<Vec<u64>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Invalid(format!("line {} column {}: {e}", e.line(), e.column()))
}

fn from_value<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(json_error)
}

impl IdealJson {
    pub fn resolve(&self, ring: &FiniteRing) -> Result<RingIdeal> {
        match self {
            IdealJson::Generator(g) => ring.principal(*g),
            IdealJson::Elements(es) => ring.ideal_from_elements(es),
        }
    }
}

/// Parses an instance file.
pub fn parse_instance(text: &str, caps: Caps) -> Result<Instance> {
    let value: Value = serde_json::from_str(text).map_err(json_error)?;
    let Value::Object(obj) = &value else {
        return Err(Error::invalid("instance must be a JSON object"));
    };
    match obj.get("schema") {
        Some(Value::Number(n)) if n.as_u64() == Some(SCHEMA_VERSION) => {}
        Some(other) => {
            return Err(Error::invalid(format!(
                "field \"schema\": unsupported version {other}, expected {SCHEMA_VERSION}"
            )))
        }
        None => return Err(Error::invalid("missing field \"schema\"")),
    }
    if obj.contains_key("ring") {
        let r: RingJson = from_value(text)?;
        let ring = match r.ring {
            RingSpecJson::Zmod(n) => FiniteRing::zmod(n)?,
            RingSpecJson::Tables(t) => FiniteRing::from_tables(t.add, t.mul, caps.ring)?,
        };
        let ideal = r.ideal.map(|i| i.resolve(&ring)).transpose()?;
        Ok(Instance::Ring { ring, ideal })
    } else if obj.contains_key("zr") {
        let z: ZrJson = from_value(text)?;
        let pool = PrimePool::new(z.zr.pool)?;
        let members =
            z.zr.members
                .iter()
                .map(|m| pool.ring(m))
                .collect::<Result<Vec<_>>>()?;
        Ok(Instance::Zr(ZrInstance {
            target: pool.ring(&z.zr.target)?,
            c: pool.ring(&z.zr.c)?,
            members,
            pool,
        }))
    } else {
        let s: SetSystemJson = from_value(text)?;
        let ctx = ContextTriple::new(&s.universe, &s.c, &s.a)?;
        let mut points = Vec::with_capacity(s.points.len());
        for (name, v) in s.points {
            let labels: Vec<String> = serde_json::from_value(v)
                .map_err(|e| Error::Invalid(format!("field \"points.{name}\": {e}")))?;
            points.push((name, labels));
        }
        let family = PointFamily::from_labels(ctx, &points)?;
        let subfamily = s
            .subfamily
            .map(|names| family.subset_by_names(&names))
            .transpose()?;
        Ok(Instance::SetSystem { family, subfamily })
    }
}

/// Parses `zmod:N`.
pub fn parse_ring_flag(spec: &str) -> Result<FiniteRing> {
    let n = spec
        .strip_prefix("zmod:")
        .and_then(|n| n.trim().parse::<u64>().ok())
        .ok_or_else(|| Error::invalid(format!("--ring expects zmod:N, got {spec:?}")))?;
    FiniteRing::zmod(n)
}
