//! JSON shape descriptions.
//!
//! ```json
//! { "kind": "ellipse", "params": { "a": 1, "b": 2 } }
//! { "kind": "polygon", "vertices": [[0, 0], [2, 0], [0, 1]], "center": [0.5, 0.3] }
//! { "kind": "cupid", "params": { "c": 2.58 }, "options": { "grid": 8192, "tol": 1e-11 } }
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use infsup::{Point, Shape64, TriangleCenter};
use serde::{Deserialize, Serialize};

use crate::Failure;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileOptions {
    pub grid: Option<usize>,
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeFile {
    pub kind: String,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    pub center: Option<[f64; 2]>,
    #[serde(default)]
    pub options: FileOptions,
    pub vertices: Option<Vec<[f64; 2]>>,
    /// `barycenter` (default) or `incenter`; triangles only.
    pub triangle_center: Option<TriangleCenter>,
}

/// Kinds and their required parameters.
const KINDS: &[(&str, &[&str])] = &[
    ("disk", &["radius"]),
    ("ellipse", &["a", "b"]),
    ("regular_polygon", &["sides", "circumradius"]),
    ("square", &["side"]),
    ("rectangle", &["width", "height"]),
    ("triangle", &[]),
    ("rhombus", &["diagonal_x", "diagonal_y"]),
    ("polygon", &[]),
    ("cupid", &["c"]),
    ("stadium", &["epsilon"]),
    ("octagon", &["q"]),
];

fn point(p: [f64; 2]) -> Point<f64> {
    Point::new(p[0], p[1])
}

impl ShapeFile {
    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|f| Failure::parse(format!("{}: {}", path.display(), f.message)))
    }

    pub fn parse(text: &str) -> Result<Self, Failure> {
        let file: ShapeFile = serde_json::from_str(text).map_err(|e| Failure::parse(e.to_string()))?;
        file.spec()?;
        Ok(file)
    }

    fn required(&self) -> Result<&'static [&'static str], Failure> {
        KINDS
            .iter()
            .find(|(k, _)| *k == self.kind)
            .map(|(_, p)| *p)
            .ok_or_else(|| {
                let names: Vec<_> = KINDS.iter().map(|(k, _)| *k).collect();
                Failure::parse(format!("field `kind`: unknown kind {:?} (expected one of {})", self.kind, names.join(", ")))
            })
    }

    fn param(&self, name: &str) -> Result<f64, Failure> {
        self.params
            .get(name)
            .copied()
            .ok_or_else(|| Failure::parse(format!("field `params.{name}`: missing for kind `{}`", self.kind)))
    }

    fn vertices(&self, count: Option<usize>) -> Result<Vec<Point<f64>>, Failure> {
        let v = self
            .vertices
            .as_ref()
            .ok_or_else(|| Failure::parse(format!("field `vertices`: missing for kind `{}`", self.kind)))?;
        if let Some(n) = count {
            if v.len() != n {
                return Err(Failure::parse(format!("field `vertices`: kind `{}` needs {n} vertices, got {}", self.kind, v.len())));
            }
        }
        Ok(v.iter().copied().map(point).collect())
    }

    /// The shape described by the file, with parameter checks.
    pub fn spec(&self) -> Result<Shape64, Failure> {
        let required = self.required()?;
        for key in self.params.keys() {
            if !required.contains(&key.as_str()) {
                return Err(Failure::parse(format!(
                    "field `params.{key}`: not a parameter of kind `{}` (expected: {})",
                    self.kind,
                    if required.is_empty() { "none".to_string() } else { required.join(", ") }
                )));
            }
        }
        if self.vertices.is_some() && !matches!(self.kind.as_str(), "polygon" | "triangle") {
            return Err(Failure::parse(format!("field `vertices`: not used by kind `{}`", self.kind)));
        }
        if self.triangle_center.is_some() && self.kind != "triangle" {
            return Err(Failure::parse("field `triangle_center`: only valid for kind `triangle`"));
        }
        let p = |name| self.param(name);
        Ok(match self.kind.as_str() {
            "disk" => Shape64::Disk { radius: p("radius")? },
            "ellipse" => Shape64::Ellipse { a: p("a")?, b: p("b")? },
            "regular_polygon" => {
                let n = p("sides")?;
                if n.fract() != 0.0 || !(3.0..=1e6).contains(&n) {
                    return Err(Failure::parse(format!("field `params.sides`: expected an integer ≥ 3, got {n}")));
                }
                Shape64::RegularPolygon {
                    sides: n as usize,
                    circumradius: p("circumradius")?,
                }
            }
            "square" => {
                let s = p("side")?;
                Shape64::Rectangle { width: s, height: s }
            }
            "rectangle" => Shape64::Rectangle {
                width: p("width")?,
                height: p("height")?,
            },
            "triangle" => {
                let v = self.vertices(Some(3))?;
                Shape64::Triangle {
                    vertices: [v[0], v[1], v[2]],
                    center: self.triangle_center.unwrap_or_default(),
                }
            }
            "rhombus" => Shape64::Rhombus {
                diagonal_x: p("diagonal_x")?,
                diagonal_y: p("diagonal_y")?,
            },
            "polygon" => Shape64::Polygon {
                vertices: self.vertices(None)?,
                center: None,
            },
            "cupid" => Shape64::CupidsBow { c: p("c")? },
            "stadium" => Shape64::DoubleStadium { epsilon: p("epsilon")? },
            "octagon" => Shape64::OctagonCe { q: p("q")? },
            _ => unreachable!("kind validated above"),
        })
    }

    pub fn center(&self) -> Option<Point<f64>> {
        self.center.map(point)
    }

    /// Copy with one parameter replaced, for sweeps.
    pub fn with_param(&self, name: &str, value: f64) -> Result<Self, Failure> {
        let required = self.required()?;
        if !required.contains(&name) {
            return Err(Failure::parse(format!("kind `{}` has no parameter `{name}`", self.kind)));
        }
        let mut copy = self.clone();
        copy.params.insert(name.to_string(), value);
        Ok(copy)
    }
}
