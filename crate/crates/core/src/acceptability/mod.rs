//! Acceptability: color compatibility plus absence of every forbidden
//! condition of the instance's class.

mod catalog;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grid::{Majority, ProblemInstance, Shape, Vertex};
use crate::region::Region;

pub(crate) use catalog::{CParams, LParams};

/// Forbidden-condition labels. Declaration order is the reporting order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ConditionId {
    ColorIncompat,
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for ConditionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use ConditionId::*;
        let all = [
            ColorIncompat, F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13, F14, F15, F16, F17, F18,
        ];
        all.into_iter().find(|c| c.to_string() == s).ok_or_else(|| format!("unknown condition `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Acceptable,
    Violated { condition: ConditionId, detail: String },
}

impl Verdict {
    pub fn is_acceptable(&self) -> bool {
        matches!(self, Verdict::Acceptable)
    }

    pub fn condition(&self) -> Option<ConditionId> {
        match self {
            Verdict::Acceptable => None,
            Verdict::Violated { condition, .. } => Some(*condition),
        }
    }

    fn violated(condition: ConditionId, detail: impl Into<String>) -> Verdict {
        Verdict::Violated { condition, detail: detail.into() }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Acceptable => write!(f, "acceptable"),
            Verdict::Violated { condition, detail } => write!(f, "{condition}: {detail}"),
        }
    }
}

/// Even-sized: endpoints of different colors. Odd-sized: both endpoints
/// carry the majority color.
pub fn color_compatible(instance: &ProblemInstance) -> bool {
    let (s, t) = (instance.s, instance.t);
    if instance.shape.is_even_sized() {
        s.color() != t.color()
    } else {
        match instance.shape.majority_color() {
            Majority::Majority { color, .. } => s.color() == color && t.color() == color,
            Majority::Balanced => false,
        }
    }
}

pub fn check_rect(instance: &ProblemInstance) -> Verdict {
    check(instance)
}

pub fn check_lshape(instance: &ProblemInstance) -> Verdict {
    check(instance)
}

pub fn check_cshape(instance: &ProblemInstance) -> Verdict {
    check(instance)
}

/// Verdict for an instance of any class.
pub fn check(instance: &ProblemInstance) -> Verdict {
    let (shape, s, t) = (instance.shape, instance.s, instance.t);
    if let Shape::CShape { m, n, k, l, d } = shape {
        let g = CParams { m, n, k, l, d };
        if catalog::c_f12(g) {
            return Verdict::violated(ConditionId::F12, format!("{shape} has a color surplus of two"));
        }
    }
    if !color_compatible(instance) {
        return Verdict::violated(
            ConditionId::ColorIncompat,
            format!("s={s} ({:?}) and t={t} ({:?}) in {shape}", s.color(), t.color()),
        );
    }
    let region = Region::from_shape(&shape);
    if let Some(v) = structural(&region, s, t) {
        return v;
    }
    let hit = match shape {
        Shape::Rect { m, n } => catalog::rect_f2(m, n, s, t).then_some(ConditionId::F2),
        Shape::LShape { m, n, k, l } => catalog::l_first(LParams { m, n, k, l }, s, t),
        Shape::CShape { m, n, k, l, d } => catalog::c_first(CParams { m, n, k, l, d }, s, t),
    };
    match hit {
        Some(c) => Verdict::violated(c, format!("s={s}, t={t} in {shape}")),
        None => Verdict::Acceptable,
    }
}

/// F1 and F3, decided on the graph itself.
fn structural(region: &Region, s: Vertex, t: Vertex) -> Option<Verdict> {
    if let Some(cut) = cut_witness(region, s, t) {
        return Some(Verdict::violated(ConditionId::F1, cut));
    }
    region
        .degree_one_vertices()
        .into_iter()
        .find(|&w| w != s && w != t)
        .map(|w| Verdict::violated(ConditionId::F3, format!("{w} has degree 1")))
}

fn cut_witness(region: &Region, s: Vertex, t: Vertex) -> Option<String> {
    if region.disconnected_without(&[s]) {
        Some(format!("{s} is a cut vertex"))
    } else if region.disconnected_without(&[t]) {
        Some(format!("{t} is a cut vertex"))
    } else if region.disconnected_without(&[s, t]) {
        Some(format!("{{{s},{t}}} is a vertex cut"))
    } else {
        None
    }
}

/// `{s,t}` (or one of them) separates the region.
pub(crate) fn has_cut(region: &Region, s: Vertex, t: Vertex) -> bool {
    cut_witness(region, s, t).is_some()
}

/// Verdict for endpoints placed on an arbitrary region, in absolute
/// coordinates. A single-vertex region with `s = t` is acceptable.
pub fn check_region(region: &Region, s: Vertex, t: Vertex) -> Verdict {
    if !region.contains(s) || !region.contains(t) {
        return Verdict::violated(ConditionId::F1, "endpoint outside region");
    }
    if s == t {
        return if region.size() == 1 {
            Verdict::Acceptable
        } else {
            Verdict::violated(ConditionId::F1, "coinciding endpoints")
        };
    }
    let (shape, frame) = region.canonical();
    let local = ProblemInstance { shape, s: frame.to_local(s), t: frame.to_local(t) };
    check(&local)
}

pub(crate) fn region_acceptable(region: &Region, s: Vertex, t: Vertex) -> bool {
    check_region(region, s, t).is_acceptable()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(shape: Shape, s: (i32, i32), t: (i32, i32)) -> ProblemInstance {
        ProblemInstance::new(shape, s.into(), t.into()).unwrap()
    }

    #[test]
    fn color_examples() {
        let r55 = Shape::rect(5, 5).unwrap();
        assert!(color_compatible(&inst(r55, (1, 1), (3, 3))));
        assert!(!color_compatible(&inst(r55, (1, 1), (2, 1))));
        let c = Shape::cshape(3, 2, 1, 1, 1).unwrap();
        assert!(color_compatible(&inst(c, (1, 1), (3, 1))));
    }

    #[test]
    fn verdict_examples() {
        let v = check_rect(&inst(Shape::rect(6, 3).unwrap(), (3, 2), (4, 2)));
        assert_eq!(v.condition(), Some(ConditionId::F2));
        let v = check_rect(&inst(Shape::rect(1, 4).unwrap(), (1, 2), (1, 3)));
        assert_eq!(v.condition(), Some(ConditionId::F1));
        assert!(check_rect(&inst(Shape::rect(2, 2).unwrap(), (1, 1), (2, 1))).is_acceptable());
        let c = Shape::cshape(5, 5, 1, 1, 1).unwrap();
        assert_eq!(check_cshape(&inst(c, (1, 1), (3, 1))).condition(), Some(ConditionId::F12));
        let c = Shape::cshape(3, 2, 1, 1, 1).unwrap();
        assert!(check_cshape(&inst(c, (1, 1), (3, 1))).is_acceptable());
    }

    #[test]
    fn degree_one_vertex_is_f3() {
        // A width-1 arm whose tip is neither endpoint.
        let l = Shape::lshape(4, 4, 3, 2).unwrap();
        let v = check_lshape(&inst(l, (1, 4), (2, 4)));
        assert_eq!(v.condition(), Some(ConditionId::F3));
    }

    #[test]
    fn condition_ids_round_trip_through_strings() {
        for c in [ConditionId::ColorIncompat, ConditionId::F1, ConditionId::F18] {
            assert_eq!(c.to_string().parse::<ConditionId>().unwrap(), c);
        }
    }
}
