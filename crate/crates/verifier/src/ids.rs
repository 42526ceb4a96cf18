use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

macro_rules! check_ids {
    ($($variant:ident => $name:literal, $lemma:literal;)*) => {
        /// Identifier of a theorem or lemma check.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        pub enum CheckId {
            $(
                #[serde(rename = $name)]
                $variant,
            )*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $name,)*
                }
            }

            pub fn is_lemma(self) -> bool {
                match self {
                    $(CheckId::$variant => $lemma,)*
                }
            }
        }

        impl FromStr for CheckId {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($name => Ok(CheckId::$variant),)*
                    other => Err(format!("unknown check id {other:?}")),
                }
            }
        }
    };
}

check_ids! {
    MillerMoreno => "miller-moreno", false;
    Pi1Decomposition => "pi1-decomposition", false;
    Kappa1Alpha1 => "kappa1-alpha1", false;
    AbelianSylowStructure => "abelian-sylow-structure", false;
    FrobeniusQuotient => "frobenius-quotient", false;
    Kappa1EqualsP => "kappa1-equals-p", false;
    CoprimeProductAdditivity => "coprime-product-additivity", true;
    PGroupKappaGap => "p-group-kappa-gap", true;
    AbelianMaximalCount => "abelian-maximal-count", true;
    OrderP3NonabelianCount => "order-p3-nonabelian-count", true;
    MnaCharacterization => "mna-characterization", true;
    MnaOrderP3 => "mna-order-p3", true;
    CyclicQuotientWitness => "cyclic-quotient-witness", true;
    CoprimeActionSplitting => "coprime-action-splitting", true;
    DerivedComplementAction => "derived-complement-action", true;
    MnaInDirectFactor => "mna-in-direct-factor", true;
    FixedPointFreeAction => "fixed-point-free-action", true;
    KappaBetaBound => "kappa-beta-bound", true;
    ClassSplitting => "class-splitting", true;
    MaximalKappaBound => "maximal-kappa-bound", true;
    KappaHeredity => "kappa-heredity", true;
    MaximalClassHeredity => "maximal-class-heredity", true;
    NormalizerIndex => "normalizer-index", true;
    TwoGeneratorCentralQuotient => "two-generator-central-quotient", true;
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parses `all`, `theorems`, `lemmas` or a comma-separated list of ids.
pub fn parse_selection(s: &str) -> Result<Vec<CheckId>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part {
            "all" => out.extend_from_slice(CheckId::ALL),
            "theorems" => out.extend(CheckId::ALL.iter().filter(|c| !c.is_lemma())),
            "lemmas" => out.extend(CheckId::ALL.iter().filter(|c| c.is_lemma())),
            id => out.push(id.parse()?),
        }
    }
    if out.is_empty() {
        return Err("empty check selection".into());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for &id in CheckId::ALL {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
        }
        assert_eq!(CheckId::ALL.iter().filter(|c| c.is_lemma()).count(), 18);
    }

    #[test]
    fn selections() {
        assert_eq!(parse_selection("all").unwrap().len(), 24);
        assert_eq!(parse_selection("theorems").unwrap().len(), 6);
        assert_eq!(
            parse_selection("kappa1-alpha1, miller-moreno").unwrap(),
            vec![CheckId::MillerMoreno, CheckId::Kappa1Alpha1]
        );
        assert!(parse_selection("nope").is_err());
        assert!(parse_selection("").is_err());
    }
}
