use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which kind of added point an [`VertexLabel::Apex`] is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ApexTag {
    North,
    South,
    Cone,
}

/// Name of a vertex.
///
/// The derived order is total and deterministic: atoms first (by id), then
/// barycenters (lexicographically over their sorted members), then apexes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "LabelRepr", into = "LabelRepr")]
pub enum VertexLabel {
    Atom(i64),
    /// Barycenter of a face; members are sorted and duplicate-free.
    Bary(Vec<VertexLabel>),
    Apex { tag: ApexTag, level: u32 },
}

impl VertexLabel {
    pub fn bary<I: IntoIterator<Item = VertexLabel>>(members: I) -> Result<Self> {
        let mut v: Vec<VertexLabel> = members.into_iter().collect();
        let len = v.len();
        v.sort();
        v.dedup();
        if v.is_empty() || v.len() != len {
            return Err(Error::BadBarycenter);
        }
        Ok(VertexLabel::Bary(v))
    }

    /// Barycenter of a set of atoms.
    pub fn bary_atoms<I: IntoIterator<Item = i64>>(ids: I) -> Result<Self> {
        Self::bary(ids.into_iter().map(VertexLabel::Atom))
    }

    pub fn apex(tag: ApexTag, level: u32) -> Self {
        VertexLabel::Apex { tag, level }
    }

    pub fn apex_level(&self) -> Option<u32> {
        match self {
            VertexLabel::Apex { level, .. } => Some(*level),
            _ => None,
        }
    }

    /// Members of a barycenter label made only of atoms.
    pub fn atom_members(&self) -> Option<Vec<i64>> {
        match self {
            VertexLabel::Bary(m) => m
                .iter()
                .map(|l| match l {
                    VertexLabel::Atom(i) => Some(*i),
                    _ => None,
                })
                .collect(),
            _ => None,
        }
    }
}

impl From<i64> for VertexLabel {
    fn from(id: i64) -> Self {
        VertexLabel::Atom(id)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Atom(i) => write!(f, "{i}"),
            VertexLabel::Bary(m) => {
                f.write_str("b(")?;
                for (k, l) in m.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{l}")?;
                }
                f.write_str(")")
            }
            VertexLabel::Apex { tag, level } => {
                let t = match tag {
                    ApexTag::North => 'N',
                    ApexTag::South => 'S',
                    ApexTag::Cone => 'C',
                };
                write!(f, "{t}{level}")
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ApexRepr {
    tag: ApexTag,
    level: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LabelRepr {
    Atom(i64),
    Bary {
        bary: Vec<LabelRepr>,
    },
    Apex {
        apex: ApexRepr,
    },
}

impl TryFrom<LabelRepr> for VertexLabel {
    type Error = Error;

    fn try_from(r: LabelRepr) -> Result<Self> {
        match r {
            LabelRepr::Atom(i) => Ok(VertexLabel::Atom(i)),
            LabelRepr::Bary { bary } => {
                let members = bary
                    .into_iter()
                    .map(VertexLabel::try_from)
                    .collect::<Result<Vec<_>>>()?;
                VertexLabel::bary(members)
            }
            LabelRepr::Apex { apex } => Ok(VertexLabel::apex(apex.tag, apex.level)),
        }
    }
}

impl From<VertexLabel> for LabelRepr {
    fn from(l: VertexLabel) -> Self {
        match l {
            VertexLabel::Atom(i) => LabelRepr::Atom(i),
            VertexLabel::Bary(m) => LabelRepr::Bary {
                bary: m.into_iter().map(LabelRepr::from).collect(),
            },
            VertexLabel::Apex { tag, level } => LabelRepr::Apex {
                apex: ApexRepr { tag, level },
            },
        }
    }
}
