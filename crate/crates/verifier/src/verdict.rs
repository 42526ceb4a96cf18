use std::collections::BTreeMap;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use mna_core::{Elem, FiniteGroup, Subgroup};

use crate::ids::CheckId;

/// Result of one check. Serialized as `true`, `false`, `"vacuous"` or
/// `"not_computed"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    Vacuous,
    NotComputed,
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Outcome::Pass => s.serialize_bool(true),
            Outcome::Fail => s.serialize_bool(false),
            Outcome::Vacuous => s.serialize_str("vacuous"),
            Outcome::NotComputed => s.serialize_str("not_computed"),
        }
    }
}

impl<'de> Deserialize<'de> for Outcome {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::Bool(true) => Ok(Outcome::Pass),
            Value::Bool(false) => Ok(Outcome::Fail),
            Value::String(s) if s == "vacuous" => Ok(Outcome::Vacuous),
            Value::String(s) if s == "not_computed" => Ok(Outcome::NotComputed),
            other => Err(de::Error::custom(format!("invalid outcome {other}"))),
        }
    }
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Vacuous => "vacuous",
            Outcome::NotComputed => "not computed",
        }
    }
}

/// A replayable statement about subgroups named in the witness. The name `G`
/// always refers to the whole group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "claim", rename_all = "snake_case")]
pub enum Claim {
    Normal {
        sub: String,
        of: String,
    },
    Abelian {
        sub: String,
    },
    NonAbelian {
        sub: String,
    },
    Cyclic {
        sub: String,
    },
    Central {
        sub: String,
    },
    Order {
        sub: String,
        order: usize,
    },
    Subset {
        sub: String,
        of: String,
    },
    Exponent {
        sub: String,
        exponent: usize,
    },
    Equal {
        a: String,
        b: String,
    },
    TrivialMeet {
        a: String,
        b: String,
    },
    /// `a, b ≤ of`, `a ∩ b = 1` and `|a|·|b| = |of|`.
    Product {
        a: String,
        b: String,
        of: String,
    },
    MinimalNonabelian {
        sub: String,
    },
    /// Nontrivial, normal in `G`, and the normal closure of each of its
    /// non-identity elements is all of it.
    MinimalNormal {
        sub: String,
    },
    Homocyclic {
        sub: String,
    },
    /// `sub` is a p-group with minimal generator count `d`.
    Generators {
        sub: String,
        d: u32,
    },
    MaximalClass {
        sub: String,
    },
    NormalizerIndex {
        sub: String,
        index: usize,
    },
    /// `C(x) ∩ on = 1` for every `x ∈ acting` outside `except` (or outside
    /// the identity when `except` is absent).
    FixedPointFree {
        acting: String,
        on: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        except: Option<String>,
    },
    /// `C_within(of) = equals`.
    Centralizer {
        of: String,
        within: String,
        equals: String,
    },
    /// `[a, b] = equals`.
    Commutator {
        a: String,
        b: String,
        equals: String,
    },
    /// `Z(of) = equals`.
    Center {
        of: String,
        equals: String,
    },
    /// `by ⊴ G` with `G/by` of maximal class.
    QuotientMaximalClass {
        by: String,
    },
    /// `sub ⊴ of` with `of/sub` cyclic.
    CyclicQuotient {
        sub: String,
        of: String,
    },
    /// Both contain `Z(G)`; their images in `G/Z(G)` form a Frobenius group
    /// with the given kernel and complement.
    FrobeniusModCenter {
        kernel: String,
        complement: String,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Named subgroups as sorted member lists.
    pub subgroups: BTreeMap<String, Vec<Elem>>,
    pub values: BTreeMap<String, Value>,
    pub claims: Vec<Claim>,
}

impl Witness {
    pub fn sub(&mut self, name: impl Into<String>, h: &Subgroup) -> String {
        let name = name.into();
        self.subgroups.insert(name.clone(), h.to_vec());
        name
    }

    pub fn val(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.to_string(), serde_json::to_value(v).expect("witness values serialize"));
    }

    pub fn claim(&mut self, c: Claim) {
        self.claims.push(c);
    }

    pub fn resolve(&self, g: &FiniteGroup, name: &str) -> Result<Subgroup, String> {
        match self.subgroups.get(name) {
            Some(elems) => {
                Subgroup::from_elements(g, elems).map_err(|e| format!("subgroup {name:?} is invalid: {e}"))
            }
            None if name == "G" => Ok(Subgroup::whole(g)),
            None => Err(format!("claim refers to unknown subgroup {name:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub group: String,
    pub descriptor: String,
    pub theorem_id: CheckId,
    /// Whether the hypotheses hold on this group.
    pub applicable: bool,
    pub passed: Outcome,
    pub witness: Witness,
    pub elapsed_ms: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_encoding() {
        let all = [Outcome::Pass, Outcome::Fail, Outcome::Vacuous, Outcome::NotComputed];
        let text = serde_json::to_string(&all).unwrap();
        assert_eq!(text, r#"[true,false,"vacuous","not_computed"]"#);
        let back: Vec<Outcome> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, all);
        assert!(serde_json::from_str::<Outcome>("\"maybe\"").is_err());
    }

    #[test]
    fn claim_encoding() {
        let c = Claim::FixedPointFree { acting: "Q".into(), on: "P".into(), except: None };
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"claim":"fixed_point_free","acting":"Q","on":"P"}"#);
        assert_eq!(serde_json::from_str::<Claim>(&text).unwrap(), c);
    }
}
