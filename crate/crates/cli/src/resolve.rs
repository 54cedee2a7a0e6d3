//! Turning command-line structure arguments into library values.

use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use coalc::codual::left_codual;
use coalc::focc::focc_space;
use coalc::format::{parse_file, Structure, StructureFile};
use coalc::{zoo, Bicomodule, Coalgebra, Focc, LeftComodule, LinearMapMatrix, RightComodule};

/// A parsed argument together with the name reported for it.
pub struct Loaded {
    pub arg: String,
    pub name: String,
    pub structure: Structure,
}

impl Loaded {
    pub fn kind(&self) -> &'static str {
        match &self.structure {
            Structure::LeftComodule(_) => "left comodule",
            Structure::RightComodule(_) => "right comodule",
            other => other.kind(),
        }
    }
}

pub fn load(arg: &str) -> Result<Loaded> {
    let file = if let Some(name) = arg.strip_prefix("zoo:") {
        let c = zoo::by_name(name)?;
        StructureFile::new(c.name().to_string(), Structure::Coalgebra(c.into_arc()))
    } else {
        parse_file(Path::new(arg)).with_context(|| format!("reading {arg}"))?
    };
    Ok(Loaded {
        arg: arg.to_string(),
        name: file.name,
        structure: file.structure,
    })
}

fn wrong_kind(l: &Loaded, wanted: &str) -> anyhow::Error {
    anyhow!("{} is a {}, expected {wanted}", l.arg, l.kind())
}

pub fn coalgebra(l: &Loaded) -> Result<Arc<Coalgebra>> {
    match &l.structure {
        Structure::Coalgebra(c) => Ok(c.clone()),
        _ => Err(wrong_kind(l, "a coalgebra")),
    }
}

/// A coalgebra stands for its regular bicomodule.
pub fn bicomodule(l: &Loaded) -> Result<Bicomodule> {
    match &l.structure {
        Structure::Coalgebra(c) => Ok(Bicomodule::regular(c.clone())),
        Structure::Bicomodule(b) => Ok(b.clone()),
        _ => Err(wrong_kind(l, "a bicomodule or coalgebra")),
    }
}

pub fn left_comodule(l: &Loaded) -> Result<LeftComodule> {
    match &l.structure {
        Structure::Coalgebra(c) => Ok(LeftComodule::regular(c.clone())),
        Structure::LeftComodule(m) => Ok(m.clone()),
        Structure::Bicomodule(b) => Ok(b.left().clone()),
        _ => Err(wrong_kind(l, "a left comodule")),
    }
}

pub fn right_comodule(l: &Loaded) -> Result<RightComodule> {
    match &l.structure {
        Structure::Coalgebra(c) => Ok(RightComodule::regular(c.clone())),
        Structure::RightComodule(m) => Ok(m.clone()),
        Structure::Bicomodule(b) => Ok(b.right().clone()),
        _ => Err(wrong_kind(l, "a right comodule")),
    }
}

/// A calculus file is used as is; otherwise basis element `index` of the
/// calculus space on the bicomodule (the zero calculus when that space is
/// trivial).
pub fn focc(l: &Loaded, index: usize) -> Result<Focc> {
    if let Structure::Focc(f) = &l.structure {
        return Ok(f.clone());
    }
    let carrier = bicomodule(l).map_err(|_| wrong_kind(l, "a calculus, bicomodule or coalgebra"))?;
    focc_on(carrier, index)
}

pub fn focc_on(carrier: Bicomodule, index: usize) -> Result<Focc> {
    let space = focc_space(&carrier)?;
    if space.dim() == 0 && index == 0 {
        return Ok(Focc::zero(carrier));
    }
    let v = space
        .basis()
        .get(index)
        .ok_or_else(|| anyhow!("calculus index {index} out of range (space has dimension {})", space.dim()))?;
    Ok(Focc::from_flat(carrier, v)?)
}

/// `codual:<s>` picks basis cofield `s` of the left codual of `carrier`;
/// anything else is read as a map file.
pub fn cofield(arg: &str, carrier: &Bicomodule) -> Result<LinearMapMatrix> {
    if let Some(s) = arg.strip_prefix("codual:") {
        let s: usize = s.parse().with_context(|| format!("bad codual index in {arg}"))?;
        let codual = left_codual(carrier)?;
        if s >= codual.dim() {
            bail!("codual index {s} out of range (codual has dimension {})", codual.dim());
        }
        return Ok(codual.basis_map(s));
    }
    let l = load(arg)?;
    match l.structure {
        Structure::Map(m) => Ok(m),
        _ => Err(wrong_kind(&l, "a map")),
    }
}
