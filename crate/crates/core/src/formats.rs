//! JSON file formats for semigroups, graded roots, modules and curves.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graded::{GradedRoot, ModuleError, RootError, TowerModule, Vertex};
use crate::multibranch::{Branch, BranchParametrization, ParamError, Series, Term};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(serde_json::Error),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("degree {0} is odd; degrees are twice a weight")]
    OddDegree(i64),
    #[error("the \"degree\" mirror does not match the weights")]
    MirrorMismatch,
    #[error("coefficient denominator must be nonzero")]
    ZeroDenominator,
}

impl From<serde_json::Error> for FormatError {
    fn from(err: serde_json::Error) -> Self {
        FormatError::Json(err)
    }
}

/// `{"generators":[…]}` or `{"members_below":[…],"conductor":c}`; the
/// second form takes `"verify_closed":false` for sets that are not closed
/// under addition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum SemigroupFile {
    Generators {
        generators: Vec<u64>,
    },
    Members {
        members_below: Vec<u64>,
        conductor: u64,
        #[serde(default = "yes")]
        verify_closed: bool,
    },
}

fn yes() -> bool {
    true
}

impl SemigroupFile {
    pub fn parse(text: &str) -> Result<NumericalSemigroup, FormatError> {
        match serde_json::from_str::<SemigroupFile>(text)? {
            SemigroupFile::Generators { generators } => {
                Ok(NumericalSemigroup::from_generators(&generators)?)
            }
            SemigroupFile::Members {
                members_below,
                conductor,
                verify_closed,
            } => Ok(NumericalSemigroup::from_members(
                &members_below,
                conductor,
                verify_closed,
            )?),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootFile {
    pub truncation_level: i64,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
}

impl RootFile {
    pub fn from_root(root: &GradedRoot) -> Self {
        let mut edges = root.edges().to_vec();
        edges.sort_unstable();
        Self {
            truncation_level: root.truncation_level(),
            vertices: root.vertices().to_vec(),
            edges,
        }
    }

    pub fn parse(text: &str) -> Result<GradedRoot, FormatError> {
        let f: RootFile = serde_json::from_str(text)?;
        Ok(GradedRoot::new(f.vertices, f.edges, f.truncation_level)?)
    }

    pub fn to_json(root: &GradedRoot) -> String {
        serde_json::to_string_pretty(&Self::from_root(root)).expect("serializable")
    }
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct V {
            id: usize,
            chi: i64,
        }
        V {
            id: self.id,
            chi: self.chi,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct V {
            id: usize,
            chi: i64,
        }
        let v = V::deserialize(d)?;
        Ok(Vertex {
            id: v.id,
            chi: v.chi,
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    #[default]
    Weight,
    Degree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModulePart {
    base: i64,
    towers: Vec<(i64, i64)>,
}

/// Written with weights and a `"degree"` mirror at twice the weights; read
/// in either grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    #[serde(default)]
    grading: Grading,
    base: i64,
    towers: Vec<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<ModulePart>,
}

impl ModuleFile {
    pub fn from_module(m: &TowerModule) -> Self {
        Self {
            grading: Grading::Weight,
            base: m.base(),
            towers: m.towers().to_vec(),
            degree: Some(ModulePart {
                base: 2 * m.base(),
                towers: m.towers().iter().map(|&(a, b)| (2 * a, 2 * b)).collect(),
            }),
        }
    }

    pub fn to_json(m: &TowerModule) -> String {
        serde_json::to_string_pretty(&Self::from_module(m)).expect("serializable")
    }

    pub fn to_value(m: &TowerModule) -> serde_json::Value {
        serde_json::to_value(Self::from_module(m)).expect("serializable")
    }

    pub fn parse(text: &str) -> Result<TowerModule, FormatError> {
        let f: ModuleFile = serde_json::from_str(text)?;
        let halve = |x: i64| {
            if x % 2 == 0 {
                Ok(x / 2)
            } else {
                Err(FormatError::OddDegree(x))
            }
        };
        let (base, towers) = match f.grading {
            Grading::Weight => (f.base, f.towers),
            Grading::Degree => (
                halve(f.base)?,
                f.towers
                    .iter()
                    .map(|&(a, b)| Ok((halve(a)?, halve(b)?)))
                    .collect::<Result<_, FormatError>>()?,
            ),
        };
        let module = TowerModule::new(base, towers)?;
        if let Some(mirror) = f.degree {
            let expected = Self::from_module(&module).degree.unwrap();
            let mut got = mirror;
            got.towers.sort_unstable();
            if got != expected {
                return Err(FormatError::MirrorMismatch);
            }
        }
        Ok(module)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermFile {
    c: (i64, i64),
    e: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BranchFile {
    coords: Vec<Vec<TermFile>>,
}

/// `{"branches":[{"coords":[[{"c":[num,den],"e":exp},…],…]},…]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    branches: Vec<BranchFile>,
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<BranchParametrization, FormatError> {
        let f: CurveFile = serde_json::from_str(text)?;
        let branches = f
            .branches
            .into_iter()
            .map(|b| {
                let coords = b
                    .coords
                    .into_iter()
                    .map(|terms| {
                        let terms = terms
                            .into_iter()
                            .map(|t| {
                                let (num, den) = t.c;
                                if den == 0 {
                                    return Err(FormatError::ZeroDenominator);
                                }
                                let s = den.signum();
                                Ok(Term {
                                    num: num * s,
                                    den: den * s,
                                    exp: t.e,
                                })
                            })
                            .collect::<Result<_, _>>()?;
                        Ok(Series { terms })
                    })
                    .collect::<Result<_, FormatError>>()?;
                Ok(Branch { coords })
            })
            .collect::<Result<_, FormatError>>()?;
        Ok(BranchParametrization::new(branches)?)
    }

    pub fn to_json(p: &BranchParametrization) -> String {
        let f = CurveFile {
            branches: p
                .branches()
                .iter()
                .map(|b| BranchFile {
                    coords: b
                        .coords
                        .iter()
                        .map(|s| {
                            s.terms
                                .iter()
                                .map(|t| TermFile {
                                    c: (t.num, t.den),
                                    e: t.exp,
                                })
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&f).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_root_pair, space_curve_pair};
    use crate::graded::roots_isomorphic;

    #[test]
    fn semigroup_files() {
        let s = SemigroupFile::parse(r#"{"generators":[6,10,31]}"#).unwrap();
        assert_eq!(s.conductor(), 46);
        let s = SemigroupFile::parse(r#"{"members_below":[0,2],"conductor":4}"#).unwrap();
        assert_eq!(s.min_gens(), &[2, 5]);
        assert!(SemigroupFile::parse(r#"{"members_below":[0,3,4],"conductor":7}"#).is_err());
        let open = r#"{"members_below":[0,3,4],"conductor":7,"verify_closed":false}"#;
        assert!(!SemigroupFile::parse(open)
            .unwrap()
            .as_set()
            .is_additively_closed());
        assert!(SemigroupFile::parse(r#"{"gens":[2,3]}"#).is_err());
    }

    #[test]
    fn module_round_trip_and_degree_grading() {
        let m = TowerModule::new(-2, vec![(-2, -1), (-2, -2), (-2, -2)]).unwrap();
        let text = ModuleFile::to_json(&m);
        assert_eq!(ModuleFile::parse(&text).unwrap(), m);
        let in_degrees = r#"{"grading":"degree","base":-4,"towers":[[-4,-2],[-4,-4],[-4,-4]]}"#;
        assert_eq!(ModuleFile::parse(in_degrees).unwrap(), m);
        let plain = r#"{"base":-2,"towers":[[-2,-1],[-2,-2],[-2,-2]]}"#;
        assert_eq!(ModuleFile::parse(plain).unwrap(), m);
        assert!(matches!(
            ModuleFile::parse(r#"{"grading":"degree","base":-3,"towers":[]}"#),
            Err(FormatError::OddDegree(-3))
        ));
        assert!(matches!(
            ModuleFile::parse(r#"{"base":-1,"towers":[],"degree":{"base":-4,"towers":[]}}"#),
            Err(FormatError::MirrorMismatch)
        ));
    }

    #[test]
    fn root_round_trip() {
        let (l, _) = example_root_pair();
        let back = RootFile::parse(&RootFile::to_json(&l)).unwrap();
        assert!(roots_isomorphic(&l, &back));
        assert_eq!(RootFile::to_json(&back), RootFile::to_json(&l));
    }

    #[test]
    fn curve_round_trip() {
        let (c, _) = space_curve_pair();
        assert_eq!(CurveFile::parse(&CurveFile::to_json(&c)).unwrap(), c);
        let text = r#"{"branches":[{"coords":[[{"c":[1,1],"e":2}],[{"c":[2,-4],"e":3}]]}]}"#;
        let p = CurveFile::parse(text).unwrap();
        assert_eq!(
            p.branches()[0].coords[1].terms[0],
            Term {
                num: -2,
                den: 4,
                exp: 3
            }
        );
        assert!(CurveFile::parse(r#"{"branches":[{"coords":[[{"c":[1,0],"e":2}]]}]}"#).is_err());
    }
}
