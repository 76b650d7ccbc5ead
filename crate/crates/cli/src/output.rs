//! JSON documents written to standard output.

use blf_core::{BoundaryData, Classification, MappingClass, Move, NormalForm, TraceStep};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

/// Integer written as a JSON number when it fits in 64 bits, as a decimal
/// string otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Big(pub BigInt);

impl Serialize for Big {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl From<&BigInt> for Big {
    fn from(n: &BigInt) -> Self {
        Big(n.clone())
    }
}

pub fn matrix(h: &MappingClass) -> [[Big; 2]; 2] {
    let [a, b, c, d] = h.entries().map(Big::from);
    [[a, b], [c, d]]
}

fn moves(ms: &[Move]) -> Vec<String> {
    ms.iter().map(Move::to_string).collect()
}

#[derive(Debug, Serialize)]
pub struct Data {
    pub sign: i32,
    pub k: Big,
}

impl From<&BoundaryData> for Data {
    fn from(d: &BoundaryData) -> Self {
        Data {
            sign: d.sign.as_i32(),
            k: Big::from(&d.k),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckDoc {
    pub system: String,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_data: Option<Data>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub euler_characteristic: usize,
}

#[derive(Debug, Serialize)]
pub struct MonodromyDoc {
    pub system: String,
    pub monodromy: [[Big; 2]; 2],
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_data: Option<Data>,
}

#[derive(Debug, Serialize)]
pub struct NormalizeDoc {
    pub system: String,
    pub normal_form: String,
    pub trivials: usize,
    pub blowups: usize,
    pub ks: Vec<Big>,
    pub moves: Vec<String>,
}

impl NormalizeDoc {
    pub fn new(input: &blf_core::CycleSystem, form: &NormalForm, system: &blf_core::CycleSystem, ms: &[Move]) -> Self {
        NormalizeDoc {
            system: input.to_string(),
            normal_form: system.to_string(),
            trivials: form.trivials,
            blowups: form.blowups,
            ks: form.ks.iter().map(Big::from).collect(),
            moves: moves(ms),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PartialDoc {
    pub error: String,
    pub budget: usize,
    pub partial_system: String,
    pub partial_moves: Vec<String>,
}

impl PartialDoc {
    pub fn new(budget: usize, partial: &blf_core::PartialNormalization) -> Self {
        PartialDoc {
            error: "budget exceeded".into(),
            budget,
            partial_system: partial.system.to_string(),
            partial_moves: moves(&partial.moves),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TraceDoc {
    pub step: usize,
    pub label: &'static str,
    pub action: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub moves: Vec<String>,
    pub summand: Option<&'static str>,
    pub system: String,
    pub boundary_data: Option<Data>,
}

impl TraceDoc {
    pub fn new(step: usize, t: &TraceStep) -> Self {
        let (action, ms) = match &t.action {
            blf_core::Action::Hurwitz(ms) => ("moves".to_string(), moves(ms)),
            other => (other.to_string(), Vec::new()),
        };
        TraceDoc {
            step,
            label: t.label,
            action,
            moves: ms,
            summand: t.summand().map(|s| s.name()),
            system: t.system.to_string(),
            boundary_data: t.data.as_ref().map(Data::from),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassificationDoc {
    pub family: &'static str,
    pub m: usize,
    pub n: usize,
    pub coorientable: bool,
    pub euler_characteristic: usize,
    pub normal_euler_number: Big,
    pub summands: Vec<&'static str>,
    pub trace: Vec<TraceDoc>,
}

impl From<&Classification> for ClassificationDoc {
    fn from(c: &Classification) -> Self {
        ClassificationDoc {
            family: c.family.name(),
            m: c.m,
            n: c.n,
            coorientable: c.coorientable,
            euler_characteristic: c.euler_characteristic,
            normal_euler_number: Big::from(&c.normal_euler),
            summands: c.ledger.iter().map(|s| s.name()).collect(),
            trace: c
                .trace
                .iter()
                .enumerate()
                .map(|(i, t)| TraceDoc::new(i + 1, t))
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EquivDoc {
    pub found: bool,
    pub depth: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub moves: Option<Vec<String>>,
}

impl EquivDoc {
    pub fn found(depth: usize, ms: &[Move]) -> Self {
        EquivDoc {
            found: true,
            depth,
            moves: Some(moves(ms)),
        }
    }

    pub fn not_found(depth: usize) -> Self {
        EquivDoc {
            found: false,
            depth,
            moves: None,
        }
    }
}
