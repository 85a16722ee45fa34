//! Grid geometry for rectangular, L-shaped and C-shaped grid graphs.
//!
//! Coordinates are 1-based with `(1,1)` at the upper-left corner and `y`
//! growing downwards. An L-shape has its notch in the top-right corner; a
//! C-shape has its notch on the top border, spanning columns `d+1..=d+k` and
//! rows `1..=l`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::region::Region;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("malformed shape: {0}")]
    MalformedShape(String),
    #[error("vertex {0} is not in the shape")]
    NotInShape(Vertex),
    #[error("endpoints must be distinct, both are {0}")]
    SameEndpoints(Vertex),
}

/// A lattice point. Ordered row-major: by `y`, then by `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub x: i32,
    pub y: i32,
}

impl Vertex {
    pub const fn new(x: i32, y: i32) -> Self {
        Vertex { x, y }
    }

    pub fn color(self) -> Color {
        color(self)
    }

    pub fn is_adjacent(self, other: Vertex) -> bool {
        (self.x - other.x).abs() + (self.y - other.y).abs() == 1
    }

    pub(crate) fn offset(self, dx: i32, dy: i32) -> Vertex {
        Vertex::new(self.x + dx, self.y + dy)
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i32, i32)> for Vertex {
    fn from((x, y): (i32, i32)) -> Self {
        Vertex::new(x, y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// White iff `x + y` is even.
pub fn color(v: Vertex) -> Color {
    if (v.x + v.y).rem_euclid(2) == 0 {
        Color::White
    } else {
        Color::Black
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: i64) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Majority {
    Balanced,
    Majority { color: Color, surplus: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeClass {
    Rect,
    #[serde(rename = "l")]
    LShape,
    #[serde(rename = "c")]
    CShape,
}

impl ShapeClass {
    pub fn name(self) -> &'static str {
        match self {
            ShapeClass::Rect => "rect",
            ShapeClass::LShape => "l",
            ShapeClass::CShape => "c",
        }
    }
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ShapeClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rect" => Ok(ShapeClass::Rect),
            "l" => Ok(ShapeClass::LShape),
            "c" => Ok(ShapeClass::CShape),
            _ => Err(format!("unknown shape class `{s}` (expected rect, l or c)")),
        }
    }
}

/// Shape of a grid graph in its own frame, upper-left vertex at `(1,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    Rect { m: i32, n: i32 },
    LShape { m: i32, n: i32, k: i32, l: i32 },
    CShape { m: i32, n: i32, k: i32, l: i32, d: i32 },
}

impl Shape {
    pub fn rect(m: i32, n: i32) -> Result<Shape, GridError> {
        let s = Shape::Rect { m, n };
        s.validate()?;
        Ok(s)
    }

    pub fn lshape(m: i32, n: i32, k: i32, l: i32) -> Result<Shape, GridError> {
        let s = Shape::LShape { m, n, k, l };
        s.validate()?;
        Ok(s)
    }

    pub fn cshape(m: i32, n: i32, k: i32, l: i32, d: i32) -> Result<Shape, GridError> {
        let s = Shape::CShape { m, n, k, l, d };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), GridError> {
        let bad = |msg: String| Err(GridError::MalformedShape(msg));
        match *self {
            Shape::Rect { m, n } => {
                if m < 1 || n < 1 {
                    return bad(format!("R({m},{n}) needs m,n >= 1"));
                }
            }
            Shape::LShape { m, n, k, l } => {
                if m < 2 || n < 2 {
                    return bad(format!("L({m},{n},{k},{l}) needs m,n > 1"));
                }
                if k < 1 || l < 1 || k >= m || l >= n {
                    return bad(format!("L({m},{n},{k},{l}) needs 1 <= k < m and 1 <= l < n"));
                }
            }
            Shape::CShape { m, n, k, l, d } => {
                if m < 2 || n < 2 {
                    return bad(format!("C({m},{n},{k},{l}; d={d}) needs m,n > 1"));
                }
                if k < 1 || l < 1 || d < 1 {
                    return bad(format!("C({m},{n},{k},{l}; d={d}) needs k,l,d >= 1"));
                }
                if l > n - 1 {
                    return bad(format!("C({m},{n},{k},{l}; d={d}) needs l <= n-1"));
                }
                if m - d - k < 1 {
                    return bad(format!("C({m},{n},{k},{l}; d={d}) needs c = m-d-k >= 1"));
                }
            }
        }
        Ok(())
    }

    pub fn class(&self) -> ShapeClass {
        match self {
            Shape::Rect { .. } => ShapeClass::Rect,
            Shape::LShape { .. } => ShapeClass::LShape,
            Shape::CShape { .. } => ShapeClass::CShape,
        }
    }

    pub fn width(&self) -> i32 {
        match *self {
            Shape::Rect { m, .. } | Shape::LShape { m, .. } | Shape::CShape { m, .. } => m,
        }
    }

    pub fn height(&self) -> i32 {
        match *self {
            Shape::Rect { n, .. } | Shape::LShape { n, .. } | Shape::CShape { n, .. } => n,
        }
    }

    /// Columns right of the notch of a C-shape.
    pub fn c(&self) -> Option<i32> {
        match *self {
            Shape::CShape { m, k, d, .. } => Some(m - d - k),
            _ => None,
        }
    }

    /// The removed block as `(x_lo, x_hi, y_lo, y_hi)`, inclusive.
    pub fn notch(&self) -> Option<(i32, i32, i32, i32)> {
        match *self {
            Shape::Rect { .. } => None,
            Shape::LShape { m, k, l, .. } => Some((m - k + 1, m, 1, l)),
            Shape::CShape { k, l, d, .. } => Some((d + 1, d + k, 1, l)),
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        if v.x < 1 || v.y < 1 || v.x > self.width() || v.y > self.height() {
            return false;
        }
        match self.notch() {
            Some((x0, x1, y0, y1)) => !(v.x >= x0 && v.x <= x1 && v.y >= y0 && v.y <= y1),
            None => true,
        }
    }

    pub fn size(&self) -> i64 {
        let full = self.width() as i64 * self.height() as i64;
        match *self {
            Shape::Rect { .. } => full,
            Shape::LShape { k, l, .. } | Shape::CShape { k, l, .. } => full - k as i64 * l as i64,
        }
    }

    pub fn size_and_parity(&self) -> (i64, Parity) {
        let n = self.size();
        (n, Parity::of(n))
    }

    pub fn is_even_sized(&self) -> bool {
        self.size() % 2 == 0
    }

    pub fn neighbors(&self, v: Vertex) -> Result<Vec<Vertex>, GridError> {
        if !self.contains(v) {
            return Err(GridError::NotInShape(v));
        }
        Ok(crate::region::DIRS
            .iter()
            .map(|&(dx, dy)| v.offset(dx, dy))
            .filter(|&u| self.contains(u))
            .collect())
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GridError> {
        self.neighbors(v).map(|n| n.len())
    }

    /// Number of white vertices.
    pub fn white_count(&self) -> i64 {
        let notch = self
            .notch()
            .map(|(x0, x1, y0, y1)| white_in_box(x0, x1, y0, y1))
            .unwrap_or(0);
        white_in_box(1, self.width(), 1, self.height()) - notch
    }

    pub fn majority_color(&self) -> Majority {
        let white = self.white_count();
        let black = self.size() - white;
        match white.cmp(&black) {
            Ordering::Equal => Majority::Balanced,
            Ordering::Greater => Majority::Majority { color: Color::White, surplus: white - black },
            Ordering::Less => Majority::Majority { color: Color::Black, surplus: black - white },
        }
    }

    /// Vertices in row-major order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let (w, h) = (self.width(), self.height());
        (1..=h).flat_map(move |y| (1..=w).map(move |x| Vertex::new(x, y))).filter(|&v| self.contains(v))
    }

    pub fn to_region(&self) -> Region {
        Region::from_shape(self)
    }

    /// Horizontal mirror `x -> m+1-x`. Only C-shapes and rectangles stay in
    /// their own class; a mirrored L-shape has its notch in the top-left corner.
    pub fn mirrored(&self) -> Option<Shape> {
        match *self {
            Shape::Rect { .. } => Some(*self),
            Shape::CShape { m, n, k, l, d } => Some(Shape::CShape { m, n, k, l, d: m - d - k }),
            Shape::LShape { .. } => None,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Shape::Rect { m, n } => write!(f, "R({m},{n})"),
            Shape::LShape { m, n, k, l } => write!(f, "L({m},{n},{k},{l})"),
            Shape::CShape { m, n, k, l, d } => write!(f, "C({m},{n},{k},{l};d={d})"),
        }
    }
}

/// Count of white points `(x,y)` with `x0<=x<=x1`, `y0<=y<=y1`.
pub(crate) fn white_in_box(x0: i32, x1: i32, y0: i32, y1: i32) -> i64 {
    if x1 < x0 || y1 < y0 {
        return 0;
    }
    let w = (x1 - x0 + 1) as i64;
    let h = (y1 - y0 + 1) as i64;
    let total = w * h;
    if total % 2 == 0 {
        total / 2
    } else if color(Vertex::new(x0, y0)) == Color::White {
        total / 2 + 1
    } else {
        total / 2
    }
}

/// An ordered vertex sequence; edges are implicit between neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Path(pub Vec<Vertex>);

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<Vertex>> for Path {
    fn from(v: Vec<Vertex>) -> Self {
        Path(v)
    }
}

/// A Hamiltonian cycle candidate: a cyclic vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Cycle(pub Vec<Vertex>);

impl Cycle {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Cycle(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive pairs including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edges().any(|(u, v)| (u == a && v == b) || (u == b && v == a))
    }

    /// Rotated to start at the row-major smallest vertex and oriented
    /// clockwise on screen (first step to the right).
    pub fn canonical(&self) -> Cycle {
        let Some((i, &min)) = self.0.iter().enumerate().min_by_key(|(_, v)| **v) else {
            return Cycle::default();
        };
        let n = self.0.len();
        let mut out: Vec<Vertex> = (0..n).map(|j| self.0[(i + j) % n]).collect();
        if n > 2 && out[1] != min.offset(1, 0) {
            out[1..].reverse();
        }
        Cycle(out)
    }

    /// True iff this is a Hamiltonian cycle of `shape`.
    pub fn is_hamiltonian_in(&self, shape: &Shape) -> bool {
        let n = self.0.len();
        if n < 4 || n as i64 != shape.size() {
            return false;
        }
        let mut seen = std::collections::HashSet::with_capacity(n);
        self.0.iter().all(|&v| shape.contains(v) && seen.insert(v)) && self.edges().all(|(a, b)| a.is_adjacent(b))
    }
}

/// A shape with two distinct marked endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProblemInstance {
    pub shape: Shape,
    pub s: Vertex,
    pub t: Vertex,
}

impl ProblemInstance {
    pub fn new(shape: Shape, s: Vertex, t: Vertex) -> Result<Self, GridError> {
        shape.validate()?;
        for v in [s, t] {
            if !shape.contains(v) {
                return Err(GridError::NotInShape(v));
            }
        }
        if s == t {
            return Err(GridError::SameEndpoints(s));
        }
        Ok(ProblemInstance { shape, s, t })
    }

    pub fn swapped(&self) -> ProblemInstance {
        ProblemInstance { shape: self.shape, s: self.t, t: self.s }
    }
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} s={} t={}", self.shape, self.s, self.t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PathDefect {
    #[error("path is empty")]
    Empty,
    #[error("path starts at {found}, expected {expected}")]
    WrongStart { expected: Vertex, found: Vertex },
    #[error("path ends at {found}, expected {expected}")]
    WrongEnd { expected: Vertex, found: Vertex },
    #[error("vertex {0} is outside the shape")]
    Outside(Vertex),
    #[error("vertex {0} is visited twice")]
    Repeated(Vertex),
    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
    #[error("path has {found} vertices, shape has {expected}")]
    Incomplete { expected: i64, found: usize },
}

/// Checks that `path` is a Hamiltonian `(s,t)`-path of the instance.
pub fn validate_path(instance: &ProblemInstance, path: &Path) -> Result<(), PathDefect> {
    let shape = &instance.shape;
    let first = path.first().ok_or(PathDefect::Empty)?;
    let last = path.last().ok_or(PathDefect::Empty)?;
    if first != instance.s {
        return Err(PathDefect::WrongStart { expected: instance.s, found: first });
    }
    if last != instance.t {
        return Err(PathDefect::WrongEnd { expected: instance.t, found: last });
    }
    let w = shape.width() as usize;
    let mut seen = vec![false; w * shape.height() as usize];
    for (i, &v) in path.vertices().iter().enumerate() {
        if !shape.contains(v) {
            return Err(PathDefect::Outside(v));
        }
        let idx = (v.y as usize - 1) * w + (v.x as usize - 1);
        if std::mem::replace(&mut seen[idx], true) {
            return Err(PathDefect::Repeated(v));
        }
        if i > 0 {
            let u = path.0[i - 1];
            if !u.is_adjacent(v) {
                return Err(PathDefect::NotAdjacent(u, v));
            }
        }
    }
    if path.len() as i64 != shape.size() {
        return Err(PathDefect::Incomplete { expected: shape.size(), found: path.len() });
    }
    Ok(())
}

pub fn is_hamiltonian_path(instance: &ProblemInstance, path: &Path) -> bool {
    validate_path(instance, path).is_ok()
}

/// How a canonical instance relates to the instance it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformRecord {
    pub mirrored: bool,
    pub swapped: bool,
    pub width: i32,
}

impl TransformRecord {
    pub fn identity(width: i32) -> Self {
        TransformRecord { mirrored: false, swapped: false, width }
    }

    pub fn is_identity(&self) -> bool {
        !self.mirrored && !self.swapped
    }

    fn mirror(&self, v: Vertex) -> Vertex {
        if self.mirrored {
            Vertex::new(self.width + 1 - v.x, v.y)
        } else {
            v
        }
    }

    /// Maps a vertex of the canonical frame back to the original frame.
    pub fn map_vertex_back(&self, v: Vertex) -> Vertex {
        self.mirror(v)
    }

    /// Maps an `(s,t)`-path of the canonical instance to an `(s,t)`-path of the
    /// original instance.
    pub fn map_path_back(&self, path: &Path) -> Path {
        let mut out: Vec<Vertex> = path.0.iter().map(|&v| self.mirror(v)).collect();
        if self.swapped {
            out.reverse();
        }
        Path(out)
    }
}

/// Canonical frame: for C-shapes `d <= c` (mirroring when needed), then
/// `s_x <= t_x` by swapping endpoints.
pub fn normalize(instance: &ProblemInstance) -> Result<(ProblemInstance, TransformRecord), GridError> {
    instance.shape.validate()?;
    let mut rec = TransformRecord::identity(instance.shape.width());
    let mut inst = *instance;
    if let Shape::CShape { m, k, d, .. } = inst.shape {
        if d > m - d - k {
            rec.mirrored = true;
            inst.shape = inst.shape.mirrored().expect("C-shapes mirror to C-shapes");
            inst.s = rec.mirror(inst.s);
            inst.t = rec.mirror(inst.t);
        }
    }
    if inst.s.x > inst.t.x {
        rec.swapped = true;
        std::mem::swap(&mut inst.s, &mut inst.t);
    }
    Ok((inst, rec))
}
