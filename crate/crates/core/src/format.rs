//! JSON structure files.
//!
//! Every file is an object with a `kind` (`coalgebra`, `comodule`,
//! `bicomodule`, `focc`, `map`) and a `name`. Tensors are written as sparse
//! entry lists `[i, j, …, "p/q"]`: unlisted entries are zero, indices are
//! 0-based, and values are canonical rational strings. Coalgebra references
//! (`coalgebra`, `carrier`) may be an embedded object, a `zoo:<name>` string
//! or a path relative to the referencing file.
//!
//! ```json
//! {"kind": "coalgebra", "name": "T1", "dim": 1,
//!  "omega": [[0, 0, 0, "1"]], "counit": ["1"]}
//! ```

use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::coalgebra::Coalgebra;
use crate::comodule::{Bicomodule, LeftComodule, RightComodule};
use crate::error::{Error, Result};
use crate::focc::Focc;
use crate::map::LinearMapMatrix;
use crate::rational::{parse_canonical, to_canonical_string};
use crate::tensor::DenseTensor;
use crate::zoo;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Coalgebra(Arc<Coalgebra>),
    LeftComodule(LeftComodule),
    RightComodule(RightComodule),
    Bicomodule(Bicomodule),
    Focc(Focc),
    Map(LinearMapMatrix),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Coalgebra(_) => "coalgebra",
            Structure::LeftComodule(_) | Structure::RightComodule(_) => "comodule",
            Structure::Bicomodule(_) => "bicomodule",
            Structure::Focc(_) => "focc",
            Structure::Map(_) => "map",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub name: String,
    pub structure: Structure,
}

impl StructureFile {
    pub fn new(name: impl Into<String>, structure: Structure) -> Self {
        Self {
            name: name.into(),
            structure,
        }
    }
}

// ---------------------------------------------------------------- emitting

fn sparse(t: &DenseTensor) -> Value {
    Value::Array(
        t.nonzeros()
            .map(|(idx, v)| {
                let mut e: Vec<Value> = idx.into_iter().map(Value::from).collect();
                e.push(Value::from(to_canonical_string(v)));
                Value::Array(e)
            })
            .collect(),
    )
}

fn coalgebra_value(c: &Coalgebra) -> Value {
    json!({
        "kind": "coalgebra",
        "name": c.name(),
        "dim": c.dim(),
        "omega": sparse(c.omega()),
        "counit": c.counit().data().iter().map(to_canonical_string).collect::<Vec<_>>(),
    })
}

fn bicomodule_value(name: &str, b: &Bicomodule) -> Value {
    json!({
        "kind": "bicomodule",
        "name": name,
        "coalgebra": coalgebra_value(b.over()),
        "dim": b.dim(),
        "left": sparse(b.left().coaction()),
        "right": sparse(b.right().coaction()),
    })
}

pub fn to_value(file: &StructureFile) -> Value {
    let name = file.name.as_str();
    match &file.structure {
        Structure::Coalgebra(c) => {
            let mut v = coalgebra_value(c);
            v["name"] = Value::from(name);
            v
        }
        Structure::LeftComodule(l) => json!({
            "kind": "comodule",
            "name": name,
            "side": "left",
            "coalgebra": coalgebra_value(l.over()),
            "dim": l.dim(),
            "coaction": sparse(l.coaction()),
        }),
        Structure::RightComodule(r) => json!({
            "kind": "comodule",
            "name": name,
            "side": "right",
            "coalgebra": coalgebra_value(r.over()),
            "dim": r.dim(),
            "coaction": sparse(r.coaction()),
        }),
        Structure::Bicomodule(b) => bicomodule_value(name, b),
        Structure::Focc(f) => json!({
            "kind": "focc",
            "name": name,
            "carrier": bicomodule_value(&format!("{name}.carrier"), f.carrier()),
            "d": sparse(f.coefficients()),
        }),
        Structure::Map(m) => json!({
            "kind": "map",
            "name": name,
            "rows": m.rows(),
            "cols": m.cols(),
            "entries": sparse(m.matrix()),
        }),
    }
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn emit(file: &StructureFile) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(file)).expect("JSON values serialise");
    s.push('\n');
    s
}

// ----------------------------------------------------------------- parsing

struct Ctx<'a> {
    base: Option<&'a Path>,
    depth: usize,
}

fn field<'v>(obj: &'v Map<String, Value>, key: &str, at: &str) -> Result<&'v Value> {
    obj.get(key)
        .ok_or_else(|| Error::parse(at, format!("missing field {key:?}")))
}

fn as_object<'v>(v: &'v Value, at: &str) -> Result<&'v Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::parse(at, "expected a JSON object"))
}

fn as_str<'v>(v: &'v Value, at: &str) -> Result<&'v str> {
    v.as_str().ok_or_else(|| Error::parse(at, "expected a string"))
}

fn as_dim(v: &Value, at: &str) -> Result<usize> {
    v.as_u64()
        .map(|d| d as usize)
        .ok_or_else(|| Error::parse(at, "expected a non-negative integer"))
}

fn parse_entries(v: &Value, shape: &[usize], at: &str) -> Result<DenseTensor> {
    let list = v
        .as_array()
        .ok_or_else(|| Error::parse(at, "expected a list of sparse entries"))?;
    let mut t = DenseTensor::zeros(shape);
    let mut seen = HashSet::new();
    for (pos, entry) in list.iter().enumerate() {
        let here = format!("{at}[{pos}]");
        let items = entry
            .as_array()
            .ok_or_else(|| Error::parse(&here, "entry must be a list"))?;
        if items.len() != shape.len() + 1 {
            return Err(Error::parse(
                &here,
                format!("entry needs {} indices and a value", shape.len()),
            ));
        }
        let mut idx = Vec::with_capacity(shape.len());
        for (axis, (item, &d)) in items.iter().zip(shape).enumerate() {
            let i = item
                .as_u64()
                .ok_or_else(|| Error::parse(&here, format!("index {axis} is not a non-negative integer")))?
                as usize;
            if i >= d {
                return Err(Error::parse(
                    &here,
                    format!("index out of range: axis {axis} has length {d}, got {i}"),
                ));
            }
            idx.push(i);
        }
        let raw = as_str(&items[shape.len()], &here)?;
        let value = parse_canonical(raw).map_err(|m| Error::parse(&here, m))?;
        if !seen.insert(idx.clone()) {
            return Err(Error::parse(&here, format!("duplicate entry for index {idx:?}")));
        }
        t[idx.as_slice()] = value;
    }
    Ok(t)
}

impl Ctx<'_> {
    fn resolve(&self, reference: &str, at: &str) -> Result<Value> {
        if self.depth > 8 {
            return Err(Error::parse(at, "reference chain too deep"));
        }
        let path = match self.base {
            Some(b) => b.join(reference),
            None => PathBuf::from(reference),
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::parse(at, format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))
    }

    fn nested(&self) -> Ctx<'_> {
        Ctx {
            base: self.base,
            depth: self.depth + 1,
        }
    }

    fn coalgebra(&self, v: &Value, at: &str) -> Result<Arc<Coalgebra>> {
        if let Some(s) = v.as_str() {
            if let Some(name) = s.strip_prefix("zoo:") {
                return zoo::by_name(name)
                    .map(Arc::new)
                    .map_err(|e| Error::parse(at, e.to_string()));
            }
            let value = self.resolve(s, at)?;
            return self.nested().coalgebra(&value, s);
        }
        match self.structure(v, at)?.structure {
            Structure::Coalgebra(c) => Ok(c),
            other => Err(Error::parse(at, format!("expected a coalgebra, found {}", other.kind()))),
        }
    }

    fn bicomodule(&self, v: &Value, at: &str) -> Result<Bicomodule> {
        if let Some(s) = v.as_str() {
            if s.starts_with("zoo:") {
                return Ok(Bicomodule::regular(self.coalgebra(v, at)?));
            }
            let value = self.resolve(s, at)?;
            return self.nested().bicomodule(&value, s);
        }
        match self.structure(v, at)?.structure {
            Structure::Bicomodule(b) => Ok(b),
            other => Err(Error::parse(at, format!("expected a bicomodule, found {}", other.kind()))),
        }
    }

    fn structure(&self, v: &Value, at: &str) -> Result<StructureFile> {
        let obj = as_object(v, at)?;
        let kind = as_str(field(obj, "kind", at)?, &format!("{at}.kind"))?;
        let name = as_str(field(obj, "name", at)?, &format!("{at}.name"))?.to_string();
        let sub = |k: &str| format!("{at}.{k}");
        let structure = match kind {
            "coalgebra" => {
                let n = as_dim(field(obj, "dim", at)?, &sub("dim"))?;
                if n == 0 {
                    return Err(Error::parse(sub("dim"), "coalgebra dimension must be positive"));
                }
                let omega = parse_entries(field(obj, "omega", at)?, &[n, n, n], &sub("omega"))?;
                let counit_list = field(obj, "counit", at)?
                    .as_array()
                    .ok_or_else(|| Error::parse(sub("counit"), "expected a list of rationals"))?;
                if counit_list.len() != n {
                    return Err(Error::parse(
                        sub("counit"),
                        format!("expected {n} values, got {}", counit_list.len()),
                    ));
                }
                let counit = counit_list
                    .iter()
                    .enumerate()
                    .map(|(i, x)| {
                        let here = format!("{at}.counit[{i}]");
                        parse_canonical(as_str(x, &here)?).map_err(|m| Error::parse(&here, m))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let c = Coalgebra::new(name.clone(), omega, DenseTensor::vector(counit))
                    .map_err(|e| Error::parse(at, e.to_string()))?;
                Structure::Coalgebra(Arc::new(c))
            }
            "comodule" => {
                let c = self.coalgebra(field(obj, "coalgebra", at)?, &sub("coalgebra"))?;
                let d = as_dim(field(obj, "dim", at)?, &sub("dim"))?;
                let t = parse_entries(field(obj, "coaction", at)?, &[d, d, c.dim()], &sub("coaction"))?;
                match as_str(field(obj, "side", at)?, &sub("side"))? {
                    "left" => Structure::LeftComodule(LeftComodule::new(c, t)?),
                    "right" => Structure::RightComodule(RightComodule::new(c, t)?),
                    other => {
                        return Err(Error::parse(sub("side"), format!("side must be left or right, got {other:?}")))
                    }
                }
            }
            "bicomodule" => {
                let c = self.coalgebra(field(obj, "coalgebra", at)?, &sub("coalgebra"))?;
                let d = as_dim(field(obj, "dim", at)?, &sub("dim"))?;
                let shape = [d, d, c.dim()];
                let lc = parse_entries(field(obj, "left", at)?, &shape, &sub("left"))?;
                let rc = parse_entries(field(obj, "right", at)?, &shape, &sub("right"))?;
                Structure::Bicomodule(Bicomodule::new(
                    LeftComodule::new(c.clone(), lc)?,
                    RightComodule::new(c, rc)?,
                )?)
            }
            "focc" => {
                let carrier = self.bicomodule(field(obj, "carrier", at)?, &sub("carrier"))?;
                let shape = [carrier.dim(), carrier.over().dim()];
                let d = parse_entries(field(obj, "d", at)?, &shape, &sub("d"))?;
                Structure::Focc(Focc::new(carrier, d)?)
            }
            "map" => {
                let rows = as_dim(field(obj, "rows", at)?, &sub("rows"))?;
                let cols = as_dim(field(obj, "cols", at)?, &sub("cols"))?;
                let m = parse_entries(field(obj, "entries", at)?, &[rows, cols], &sub("entries"))?;
                Structure::Map(LinearMapMatrix::new(m)?)
            }
            other => return Err(Error::parse(sub("kind"), format!("unknown kind {other:?}"))),
        };
        Ok(StructureFile { name, structure })
    }
}

/// Parses a structure from JSON text. Relative file references resolve
/// against `base` (or the working directory).
pub fn parse(text: &str, base: Option<&Path>) -> Result<StructureFile> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    Ctx { base, depth: 0 }.structure(&value, "$")
}

pub fn parse_file(path: &Path) -> Result<StructureFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    parse(&text, path.parent()).map_err(|e| match e {
        Error::Parse { location, message } => Error::Parse {
            location: format!("{}: {location}", path.display()),
            message,
        },
        other => other,
    })
}
