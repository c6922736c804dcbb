use std::collections::BTreeMap;

use serde::Serialize;

use super::{girth, type_profile};
use crate::{canonical_code, Error, PlaneGraph, Result};

/// Vertex, edge and face counts of a plane graph, broken down by degree,
/// face length and incidence with triangular faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceStats {
    pub p: usize,
    pub q: usize,
    pub f: usize,
    /// Vertices by degree.
    pub p_i: BTreeMap<usize, usize>,
    /// Faces by length.
    pub f_i: BTreeMap<usize, usize>,
    /// Edges on no, one and two triangular faces.
    pub q0: usize,
    pub q1: usize,
    pub q2: usize,
    pub girth: Option<usize>,
}

impl FaceStats {
    pub fn faces_of_len(&self, len: usize) -> usize {
        self.f_i.get(&len).copied().unwrap_or(0)
    }

    pub fn vertices_of_degree(&self, d: usize) -> usize {
        self.p_i.get(&d).copied().unwrap_or(0)
    }
}

pub fn face_stats(g: &PlaneGraph) -> FaceStats {
    let mut p_i = BTreeMap::new();
    for v in 0..g.n() {
        *p_i.entry(g.degree(v)).or_insert(0) += 1;
    }
    let mut f_i = BTreeMap::new();
    for face in g.faces() {
        *f_i.entry(face.len()).or_insert(0) += 1;
    }
    let tri = |d: usize| g.faces()[g.face_of(d)].len() == 3;
    let (mut q0, mut q1, mut q2) = (0, 0, 0);
    for d in 0..g.num_darts() {
        if g.tail(d) > g.head(d) {
            continue;
        }
        match tri(d) as u8 + tri(g.rev(d)) as u8 {
            0 => q0 += 1,
            1 => q1 += 1,
            _ => q2 += 1,
        }
    }
    FaceStats {
        p: g.n(),
        q: g.q(),
        f: g.f(),
        p_i,
        f_i,
        q0,
        q1,
        q2,
        girth: girth(&g.to_abstract()),
    }
}

/// Evaluation of `q2 >= 15 + q/2 + q0 >= 30` for a connected 5-regular plane
/// graph without quadrangular faces. Bounds are compared after doubling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop30Report {
    pub q: usize,
    pub q0: usize,
    pub q1: usize,
    pub q2: usize,
    /// `2 * (15 + q/2 + q0)`.
    pub middle_doubled: usize,
    pub first_holds: bool,
    pub second_holds: bool,
    pub first_tight: bool,
    pub second_tight: bool,
}

impl Prop30Report {
    pub fn holds(&self) -> bool {
        self.first_holds && self.second_holds
    }

    /// `15 + q/2 + q0` as a decimal (it may be a half-integer).
    pub fn middle(&self) -> f64 {
        self.middle_doubled as f64 / 2.0
    }
}

pub fn prop30_report(g: &PlaneGraph) -> Result<Prop30Report> {
    if !g.is_connected() {
        return Err(Error::PreconditionViolated("not connected".into()));
    }
    if (0..g.n()).any(|v| g.degree(v) != 5) {
        return Err(Error::PreconditionViolated("not 5-regular".into()));
    }
    let s = face_stats(g);
    if s.faces_of_len(4) > 0 {
        return Err(Error::PreconditionViolated(format!(
            "has {} quadrangular faces",
            s.faces_of_len(4)
        )));
    }
    let middle_doubled = 30 + s.q + 2 * s.q0;
    Ok(Prop30Report {
        q: s.q,
        q0: s.q0,
        q1: s.q1,
        q2: s.q2,
        middle_doubled,
        first_holds: 2 * s.q2 >= middle_doubled,
        second_holds: middle_doubled >= 60,
        first_tight: 2 * s.q2 == middle_doubled,
        second_tight: middle_doubled == 60,
    })
}

/// Evaluation of `f/2 + 4 <= f3 <= 2f/3 - 4/3` and `q1 >= 3q/4 + 15` for a
/// quartic plane Deza graph outside the three small exceptional ones. All
/// comparisons are done on integer multiples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop1223Report {
    pub f: usize,
    pub f3: usize,
    pub q: usize,
    pub q1: usize,
    pub lower_holds: bool,
    pub lower_tight: bool,
    pub upper_holds: bool,
    pub upper_tight: bool,
    pub q1_holds: bool,
    pub q1_tight: bool,
}

impl Prop1223Report {
    pub fn holds(&self) -> bool {
        self.lower_holds && self.upper_holds && self.q1_holds
    }
}

pub fn prop1223_report(g: &PlaneGraph) -> Result<Prop1223Report> {
    if (0..g.n()).any(|v| g.degree(v) != 4) {
        return Err(Error::PreconditionViolated("not 4-regular".into()));
    }
    let profile = type_profile(&g.to_abstract())?;
    if profile.a_set.len() > 2 {
        return Err(Error::PreconditionViolated(format!(
            "not a Deza graph (type {:?})",
            profile.as_vec()
        )));
    }
    if g.is_connected() {
        if let Some(name) = crate::fixtures::exceptional_name(&canonical_code(g)?) {
            return Err(Error::PreconditionViolated(format!(
                "{name} is one of the small exceptional quartic graphs"
            )));
        }
    }
    let s = face_stats(g);
    let f3 = s.faces_of_len(3);
    let (f, q, q1) = (s.f, s.q, s.q1);
    Ok(Prop1223Report {
        f,
        f3,
        q,
        q1,
        lower_holds: 2 * f3 >= f + 8,
        lower_tight: 2 * f3 == f + 8,
        upper_holds: 3 * f3 + 4 <= 2 * f,
        upper_tight: 3 * f3 + 4 == 2 * f,
        q1_holds: 4 * q1 >= 3 * q + 60,
        q1_tight: 4 * q1 == 3 * q + 60,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::embed;
    use crate::graph::named::*;

    #[test]
    fn cube_and_icosahedron_stats() {
        let c = face_stats(&embed(&cube()).unwrap().unwrap());
        assert_eq!(c.faces_of_len(4), 6);
        assert_eq!((c.q0, c.q1, c.q2), (12, 0, 0));
        assert_eq!(c.girth, Some(4));
        let i = face_stats(&embed(&icosahedron()).unwrap().unwrap());
        assert_eq!((i.q, i.q2, i.q0), (30, 30, 0));
        assert_eq!(2 * i.q2 + i.q1, 3 * i.faces_of_len(3));
    }

    #[test]
    fn prop30_on_icosahedron_is_tight() {
        let r = prop30_report(&embed(&icosahedron()).unwrap().unwrap()).unwrap();
        assert!(r.first_tight && r.second_tight && r.holds());
        assert_eq!(r.middle(), 30.0);
    }

    #[test]
    fn prop30_preconditions() {
        let cube = embed(&cube()).unwrap().unwrap();
        assert!(matches!(
            prop30_report(&cube),
            Err(Error::PreconditionViolated(m)) if m.contains("5-regular")
        ));
    }
}
