use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::generate::{
    cubic_levels, quadrangulation_levels, quartic_levels, triangulation_levels, Levels,
};
use crate::graph::codec::encode_graph6;
use crate::{canonical_code, AbstractGraph, CanonicalCode, Error, PlaneGraph, Result};

/// One graph of a population. `label` is a fixture name, a canonical code
/// in hex, or a graph6 line for graphs without an embedding.
#[derive(Clone, Debug)]
pub struct Member {
    pub label: String,
    pub graph: AbstractGraph,
    pub plane: Option<PlaneGraph>,
}

impl Member {
    pub fn plane(label: impl Into<String>, g: PlaneGraph) -> Self {
        Member {
            label: label.into(),
            graph: g.to_abstract(),
            plane: Some(g),
        }
    }

    pub fn abstract_only(label: impl Into<String>, g: AbstractGraph) -> Self {
        Member {
            label: label.into(),
            graph: g,
            plane: None,
        }
    }

    /// Hex canonical code for connected plane members, graph6 otherwise.
    pub fn id(&self) -> String {
        match &self.plane {
            Some(p) if p.is_connected() => canonical_code(p)
                .map(|c| c.to_hex())
                .unwrap_or_else(|_| encode_graph6(&self.graph)),
            _ => encode_graph6(&self.graph),
        }
    }
}

/// A population descriptor such as `quartic:13` or `fixtures:all`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Population {
    Quartic(usize),
    Cubic(usize),
    Quad(usize),
    Tri(usize),
    /// Everything generated up to the order: quartic and cubic polyhedra,
    /// quadrangulations and triangulations.
    Polyhedra(usize),
    Fixtures,
    FiveRegular,
    Table2,
    /// Order bound for the generator cross-check.
    Order(usize),
}

impl FromStr for Population {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownPopulation(s.to_string());
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        let num = || arg.parse::<usize>().map_err(|_| bad());
        Ok(match kind {
            "quartic" => Population::Quartic(num()?),
            "cubic" => Population::Cubic(num()?),
            "quad" => Population::Quad(num()?),
            "tri" => Population::Tri(num()?),
            "polyhedra" => Population::Polyhedra(num()?),
            "n" => Population::Order(num()?),
            "fixtures" if arg == "all" || arg.is_empty() => Population::Fixtures,
            "fixtures" if arg == "5regular" => Population::FiveRegular,
            "table2" => Population::Table2,
            _ => return Err(bad()),
        })
    }
}

impl fmt::Display for Population {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Population::Quartic(n) => write!(f, "quartic:{n}"),
            Population::Cubic(n) => write!(f, "cubic:{n}"),
            Population::Quad(n) => write!(f, "quad:{n}"),
            Population::Tri(n) => write!(f, "tri:{n}"),
            Population::Polyhedra(n) => write!(f, "polyhedra:{n}"),
            Population::Fixtures => write!(f, "fixtures:all"),
            Population::FiveRegular => write!(f, "fixtures:5regular"),
            Population::Table2 => write!(f, "table2"),
            Population::Order(n) => write!(f, "n:{n}"),
        }
    }
}

impl Population {
    /// The generated streams behind this population, or `None` for the
    /// named and constructed ones.
    pub fn generated(&self) -> Option<Vec<Levels>> {
        Some(match *self {
            Population::Quartic(n) => vec![quartic_levels(n)],
            Population::Cubic(n) => vec![cubic_levels(n)],
            Population::Quad(n) => vec![quadrangulation_levels(n, true)],
            Population::Tri(n) => vec![triangulation_levels(n)],
            Population::Polyhedra(n) | Population::Order(n) => vec![
                quartic_levels(n),
                cubic_levels(n),
                quadrangulation_levels(n, true),
                triangulation_levels(n),
            ],
            _ => return None,
        })
    }

    /// Every member; generated streams are decoded and deduplicated.
    pub fn members(&self) -> Vec<Member> {
        if let Some(streams) = self.generated() {
            let codes: BTreeSet<&CanonicalCode> = streams.iter().flat_map(|l| l.codes()).collect();
            return codes
                .into_iter()
                .map(|c| Member::plane(c.to_hex(), c.decode().expect("stored codes decode")))
                .collect();
        }
        match *self {
            Population::Fixtures => crate::fixtures::all()
                .into_iter()
                .map(|(name, g)| Member::plane(name, g))
                .collect(),
            Population::FiveRegular => crate::fixtures::five_regular()
                .into_iter()
                .map(|(name, g)| Member::plane(name, g))
                .collect(),
            Population::Table2 => crate::fixtures::table2_families()
                .into_iter()
                .map(|(name, g)| Member::abstract_only(name, g))
                .collect(),
            _ => unreachable!("generated populations handled above"),
        }
    }
}

/// Parses a descriptor and materialises its members.
pub fn population(spec: &str) -> Result<Vec<Member>> {
    Ok(spec.parse::<Population>()?.members())
}
