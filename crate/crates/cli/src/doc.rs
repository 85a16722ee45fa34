//! JSON documents read and written by the command line tool.

use serde::{Deserialize, Serialize};

use cgrid_ham::grid::{ProblemInstance, Shape, ShapeClass, Vertex};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeDoc {
    pub class: ShapeClass,
    pub m: i32,
    pub n: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub shape: ShapeDoc,
    pub s: [i32; 2],
    pub t: [i32; 2],
}

impl InstanceDocument {
    pub fn from_instance(inst: &ProblemInstance) -> Self {
        let shape = match inst.shape {
            Shape::Rect { m, n } => ShapeDoc { class: ShapeClass::Rect, m, n, k: None, l: None, d: None },
            Shape::LShape { m, n, k, l } => {
                ShapeDoc { class: ShapeClass::LShape, m, n, k: Some(k), l: Some(l), d: None }
            }
            Shape::CShape { m, n, k, l, d } => {
                ShapeDoc { class: ShapeClass::CShape, m, n, k: Some(k), l: Some(l), d: Some(d) }
            }
        };
        InstanceDocument { shape, s: [inst.s.x, inst.s.y], t: [inst.t.x, inst.t.y] }
    }

    pub fn to_instance(&self) -> Result<ProblemInstance, CliError> {
        let sh = &self.shape;
        let need = |v: Option<i32>, name: &str| {
            v.ok_or_else(|| CliError::Invalid(format!("shape class `{}` needs field `{name}`", sh.class)))
        };
        let refuse = |v: Option<i32>, name: &str| match v {
            Some(_) => Err(CliError::Invalid(format!("shape class `{}` takes no field `{name}`", sh.class))),
            None => Ok(()),
        };
        let shape = match sh.class {
            ShapeClass::Rect => {
                refuse(sh.k, "k")?;
                refuse(sh.l, "l")?;
                refuse(sh.d, "d")?;
                Shape::rect(sh.m, sh.n)?
            }
            ShapeClass::LShape => {
                refuse(sh.d, "d")?;
                Shape::lshape(sh.m, sh.n, need(sh.k, "k")?, need(sh.l, "l")?)?
            }
            ShapeClass::CShape => {
                Shape::cshape(sh.m, sh.n, need(sh.k, "k")?, need(sh.l, "l")?, need(sh.d, "d")?)?
            }
        };
        let v = |[x, y]: [i32; 2]| Vertex::new(x, y);
        Ok(ProblemInstance::new(shape, v(self.s), v(self.t))?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Path,
    NotAcceptable,
    Invalid,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Path => 0,
            Status::NotAcceptable => 2,
            Status::Invalid => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub vertices: u64,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<[i32; 2]>>,
    pub stats: Stats,
}

impl ResultDocument {
    pub fn invalid() -> Self {
        ResultDocument { status: Status::Invalid, condition: None, path: None, stats: Stats { vertices: 0, elapsed_ms: 0.0 } }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn path_vertices(&self) -> Option<Vec<Vertex>> {
        self.path.as_ref().map(|p| p.iter().map(|&[x, y]| Vertex::new(x, y)).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Acceptable,
    NotAcceptable,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDocument {
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
}

impl CheckDocument {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            CheckStatus::Acceptable => 0,
            CheckStatus::NotAcceptable => 2,
            CheckStatus::Invalid => 1,
        }
    }
}

/// Instance fields collected from flags; any field given here replaces the
/// one from the input document.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InstanceOverrides {
    pub class: Option<ShapeClass>,
    pub m: Option<i32>,
    pub n: Option<i32>,
    pub k: Option<i32>,
    pub l: Option<i32>,
    pub d: Option<i32>,
    pub s: Option<[i32; 2]>,
    pub t: Option<[i32; 2]>,
}

impl InstanceOverrides {
    /// Merge over `base` (the parsed input document, if any).
    pub fn apply(&self, base: Option<InstanceDocument>) -> Result<InstanceDocument, CliError> {
        let missing = |what: &str| CliError::Invalid(format!("missing {what}: give an input document or --{what}"));
        let (shape, s, t) = match base {
            Some(doc) => (Some(doc.shape), Some(doc.s), Some(doc.t)),
            None => (None, None, None),
        };
        let shape = match (shape, self.class) {
            (Some(mut sh), class) => {
                if let Some(c) = class {
                    if c != sh.class {
                        // A new class makes the old optional fields meaningless.
                        sh = ShapeDoc { class: c, m: sh.m, n: sh.n, k: None, l: None, d: None };
                    }
                }
                sh
            }
            (None, Some(class)) => ShapeDoc {
                class,
                m: self.m.ok_or_else(|| missing("m"))?,
                n: self.n.ok_or_else(|| missing("n"))?,
                k: None,
                l: None,
                d: None,
            },
            (None, None) => return Err(missing("class")),
        };
        let shape = ShapeDoc {
            m: self.m.unwrap_or(shape.m),
            n: self.n.unwrap_or(shape.n),
            k: self.k.or(shape.k),
            l: self.l.or(shape.l),
            d: self.d.or(shape.d),
            ..shape
        };
        Ok(InstanceDocument {
            shape,
            s: self.s.or(s).ok_or_else(|| missing("s"))?,
            t: self.t.or(t).ok_or_else(|| missing("t"))?,
        })
    }
}

/// Parse `x,y`.
pub fn parse_point(text: &str) -> Result<[i32; 2], String> {
    let (x, y) = text.split_once(',').ok_or_else(|| format!("expected `x,y`, got `{text}`"))?;
    let p = |v: &str| v.trim().parse::<i32>().map_err(|e| format!("bad coordinate `{v}`: {e}"));
    Ok([p(x)?, p(y)?])
}
