use std::sync::Arc;

use anyhow::{bail, Result};
use coalc::codual::{comodule_map_space, comodule_map_space_right, left_codual, prop28_isomorphism, right_codual};
use coalc::coalgebra::dimodule_report;
use coalc::comodule::tensor_bicomodule;
use coalc::focc::{cartan_map, coder_space, coderivation_report, focc_space, kahler_probe, verify_thm32, verify_thm33};
use coalc::format::{Structure, StructureFile};
use coalc::hom::verify_quadruple;
use coalc::linalg::SolutionSpace;
use coalc::{zoo, Bicomodule, Coalgebra, Coderivation, Focc, LinearMapMatrix, ValidationReport};
use serde_json::{json, Value};

use crate::report::{rationals, sparse, structure, Report, Verdict};
use crate::resolve::{self, load, Loaded};
use crate::{Command, SideArg, Theorem, ZooAction};

pub fn run(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Validate { structure } => validate(structure),
        Command::Cocommutative { coalgebra } => cocommutative(coalgebra),
        Command::DualAlgebra { coalgebra } => dual_algebra(coalgebra),
        Command::DimoduleCheck { coalgebra } => dimodule(coalgebra),
        Command::Regular { coalgebra } => regular(coalgebra),
        Command::Dual { structure } => dual(structure),
        Command::Tensor { left, right } => tensor(left, right),
        Command::QuadrupleCheck { source, target } => quadruple(source, target.as_deref().unwrap_or(source)),
        Command::ComSpace { source, target, right } => com_space(source, target, *right),
        Command::Codual { side, bicomodule } => codual(*side, bicomodule),
        Command::Prop28 { coalgebra } => prop28(coalgebra),
        Command::FoccSolve { bicomodule } => focc_solve(bicomodule),
        Command::Coder { coalgebra } => coder(coalgebra),
        Command::Cartan { focc, focc_index, x } => cartan(focc, *focc_index, x),
        Command::Verify { theorem: Theorem::Thm32, input, focc_index, x } => thm32(input, *focc_index, x.as_deref()),
        Command::Verify { theorem: Theorem::Thm33, input, focc_index, x } => {
            if x.is_some() {
                bail!("--x only applies to thm32");
            }
            thm33(input, *focc_index)
        }
        Command::Probe { focc, focc_index } => probe(focc, *focc_index),
        Command::Zoo { action, name } => zoo_verb(*action, name.as_deref()),
    }
}

fn with_input(r: Report, l: &Loaded) -> Report {
    r.input(&l.arg, l.kind(), &l.name)
}

fn validate(arg: &str) -> Result<Report> {
    let l = load(arg)?;
    let over = match &l.structure {
        Structure::Coalgebra(c) => Some(c.clone()),
        Structure::LeftComodule(m) => Some(m.over().clone()),
        Structure::RightComodule(m) => Some(m.over().clone()),
        Structure::Bicomodule(b) => Some(b.over().clone()),
        Structure::Focc(f) => Some(f.carrier().over().clone()),
        Structure::Map(_) => None,
    };
    let mut violations = over.as_deref().map(Coalgebra::validate).unwrap_or_default();
    if violations.is_valid() {
        let own = match &l.structure {
            Structure::Coalgebra(_) | Structure::Map(_) => ValidationReport::default(),
            Structure::LeftComodule(m) => m.validate()?,
            Structure::RightComodule(m) => m.validate()?,
            Structure::Bicomodule(b) => b.validate()?,
            Structure::Focc(f) => {
                let mut r = f.carrier().validate()?;
                if r.is_valid() {
                    r.merge(f.validate());
                }
                r
            }
        };
        violations.merge(own);
    }
    let mut r = with_input(Report::new("validate", Verdict::validity(violations.is_valid())), &l);
    if let Some(c) = &over {
        r = r.detail("coalgebra", c.name()).detail("coalgebra_dim", c.dim());
    }
    if let Structure::Map(m) = &l.structure {
        r = r.detail("rows", m.rows()).detail("cols", m.cols());
    }
    Ok(r.violations(&violations))
}

fn cocommutative(arg: &str) -> Result<Report> {
    let l = load(arg)?;
    let c = resolve::coalgebra(&l)?;
    let defect = c.cocommutativity_defect();
    let mut r = with_input(Report::new("cocommutative", Verdict::truth(defect.is_none())), &l);
    if let Some([a, b, g]) = defect {
        let flipped = c.omega()[[a, g, b]].clone();
        let report = ValidationReport {
            violations: vec![coalc::Violation {
                axiom: "cocommutativity".into(),
                index: vec![a, b, g],
                lhs: c.omega()[[a, b, g]].clone(),
                rhs: flipped,
            }],
        };
        r = r.violations(&report);
    }
    Ok(r)
}

fn dual_algebra(arg: &str) -> Result<Report> {
    let l = load(arg)?;
    let c = resolve::coalgebra(&l)?;
    let a = c.dual_algebra()?;
    let report = a.validate();
    Ok(with_input(Report::new("dual-algebra", Verdict::validity(report.is_valid())), &l)
        .detail("dim", a.dim())
        .bulky("mult", sparse(&a.mult))
        .bulky("unit", rationals(a.unit.data()))
        .violations(&report))
}

fn dimodule(arg: &str) -> Result<Report> {
    let l = load(arg)?;
    let c = resolve::coalgebra(&l)?;
    let report = dimodule_report(&c)?;
    Ok(with_input(Report::new("dimodule-check", Verdict::truth(report.is_valid())), &l)
        .detail("dim", c.dim())
        .violations(&report))
}

/// Reports an emitted structure, validated.
fn emitted(command: &str, l: &[&Loaded], name: String, b: Bicomodule) -> Result<Report> {
    let report = b.validate()?;
    let mut r = Report::new(command, Verdict::validity(report.is_valid()));
    for x in l {
        r = with_input(r, x);
    }
    Ok(r.detail("dim", b.dim())
        .bulky("structure", structure(&StructureFile::new(name, Structure::Bicomodule(b))))
        .violations(&report))
}

fn regular(arg: &str) -> Result<Report> {
    let l = load(arg)?;
    let c = resolve::coalgebra(&l)?;
    c.ensure_valid()?;
    emitted("regular", &[&l], format!("{}.regular", l.name), Bicomodule::regular(c))
}

fn dual(arg: &str) -> Result<Report> {
    let l = load(arg)?;
    let name = format!("{}.dual", l.name);
    let file = match &l.structure {
        Structure::LeftComodule(m) => StructureFile::new(name, Structure::RightComodule(m.dual())),
        Structure::RightComodule(m) => StructureFile::new(name, Structure::LeftComodule(m.dual())),
        _ => return emitted("dual", &[&l], name, resolve::bicomodule(&l)?.dual()),
    };
    let report = match &file.structure {
        Structure::LeftComodule(m) => m.validate()?,
        Structure::RightComodule(m) => m.validate()?,
        _ => unreachable!(),
    };
    Ok(with_input(Report::new("dual", Verdict::validity(report.is_valid())), &l)
        .bulky("structure", structure(&file))
        .violations(&report))
}

fn tensor(left: &str, right: &str) -> Result<Report> {
    let (l, r) = (load(left)?, load(right)?);
    let b = tensor_bicomodule(&resolve::left_comodule(&l)?, &resolve::right_comodule(&r)?)?;
    emitted("tensor", &[&l, &r], format!("{}⊗{}", l.name, r.name), b)
}

fn quadruple(source: &str, target: &str) -> Result<Report> {
    let (lw, lu) = (load(source)?, load(target)?);
    let (w, u) = (resolve::bicomodule(&lw)?, resolve::bicomodule(&lu)?);
    w.ensure_valid()?;
    u.ensure_valid()?;
    let q = verify_quadruple(&w, &u)?;
    let mut r = with_input(with_input(Report::new("quadruple-check", Verdict::truth(q.holds())), &lw), &lu);
    let axioms: serde_json::Map<String, Value> = q
        .axioms
        .iter()
        .map(|(h, rep)| (h.to_string(), Value::from(rep.is_valid())))
        .collect();
    let pairs: serde_json::Map<String, Value> = q
        .pairs
        .iter()
        .map(|((a, b), rep)| (format!("{a}/{b}"), Value::from(rep.is_valid())))
        .collect();
    r = r.detail("hom_dim", w.dim() * u.dim()).detail("axioms", axioms).detail("pairs", pairs);
    for rep in q.axioms.iter().map(|(_, x)| x).chain(q.pairs.iter().map(|(_, x)| x)) {
        r = r.violations(rep);
    }
    Ok(r)
}

/// Residuals of every basis vector against the constraint matrix; always
/// zero for a correct solver.
fn basis_residuals(space: &SolutionSpace) -> Result<ValidationReport> {
    let mut report = ValidationReport::default();
    for (s, v) in space.basis().iter().enumerate() {
        let res = space.residual(v)?;
        for (idx, x) in res.nonzeros() {
            report.violations.push(coalc::Violation {
                axiom: format!("basis element {s} satisfies the constraints"),
                index: idx,
                lhs: x.clone(),
                rhs: coalc::rational::zero(),
            });
        }
    }
    Ok(report)
}

fn maps(space: &SolutionSpace, rows: usize, cols: usize, prefix: &str) -> Value {
    Value::Array(
        space
            .basis()
            .iter()
            .enumerate()
            .map(|(s, v)| {
                let m = LinearMapMatrix::from_flat(rows, cols, v).expect("basis shape");
                structure(&StructureFile::new(format!("{prefix}.{s}"), Structure::Map(m)))
            })
            .collect(),
    )
}

fn com_space(source: &str, target: &str, right: bool) -> Result<Report> {
    let (lw, lu) = (load(source)?, load(target)?);
    let (space, dw, du) = if right {
        let (w, u) = (resolve::right_comodule(&lw)?, resolve::right_comodule(&lu)?);
        (comodule_map_space_right(&w, &u)?, w.dim(), u.dim())
    } else {
        let (w, u) = (resolve::left_comodule(&lw)?, resolve::left_comodule(&lu)?);
        (comodule_map_space(&w, &u)?, w.dim(), u.dim())
    };
    let residuals = basis_residuals(&space)?;
    let prefix = format!("Com({},{})", lw.name, lu.name);
    Ok(with_input(with_input(Report::new("com-space", Verdict::truth(residuals.is_valid())), &lw), &lu)
        .detail("side", if right { "right" } else { "left" })
        .detail("dim", space.dim())
        .bulky("basis", maps(&space, du, dw, &prefix))
        .violations(&residuals))
}

fn codual(side: SideArg, arg: &str) -> Result<Report> {
    let l = load(arg)?;
    let u = resolve::bicomodule(&l)?;
    let cod = match side {
        SideArg::Left => left_codual(&u)?,
        SideArg::Right => right_codual(&u)?,
    };
    let mut report = basis_residuals(&cod.space)?;
    report.merge(cod.induced.validate()?);
    let prefix = format!("{}.{}codual", l.name, cod.side);
    Ok(with_input(Report::new("codual", Verdict::truth(report.is_valid())), &l)
        .detail("side", cod.side.to_string())
        .detail("dim", cod.dim())
        .bulky("basis", maps(&cod.space, u.dim(), u.over().dim(), &prefix))
        .bulky(
            "induced",
            structure(&StructureFile::new(prefix, Structure::Bicomodule(cod.induced.clone()))),
        )
        .violations(&report))
}

fn prop28(arg: &str) -> Result<Report> {
    let l = load(arg)?;
    let c = resolve::coalgebra(&l)?;
    let iso = prop28_isomorphism(&c)?;
    Ok(with_input(Report::new("prop28", Verdict::truth(iso.holds())), &l)
        .detail("dim", iso.dim)
        .detail("coalgebra_dim", c.dim())
        .detail("invertible", iso.invertible)
        .bulky("matrix", sparse(&iso.matrix))
        .violations(&iso.intertwining))
}

fn focc_solve(arg: &str) -> Result<Report> {
    let l = load(arg)?;
    let u = resolve::bicomodule(&l)?;
    let space = focc_space(&u)?;
    let mut report = basis_residuals(&space)?;
    let mut basis = Vec::new();
    for (s, v) in space.basis().iter().enumerate() {
        let f = Focc::from_flat(u.clone(), v)?;
        report.merge(f.coleibniz_report());
        basis.push(structure(&StructureFile::new(format!("{}.focc.{s}", l.name), Structure::Focc(f))));
    }
    Ok(with_input(Report::new("focc-solve", Verdict::truth(report.is_valid())), &l)
        .detail("dim", space.dim())
        .bulky("basis", basis)
        .violations(&report))
}

fn coder(arg: &str) -> Result<Report> {
    let l = load(arg)?;
    let c = resolve::coalgebra(&l)?;
    let space = coder_space(&c)?;
    let n = c.dim();
    let mut report = ValidationReport::default();
    let mut basis = Vec::new();
    for (s, v) in space.basis().iter().enumerate() {
        let xi = Coderivation::from_flat(n, v)?.xi;
        report.merge(coderivation_report(&c, &xi));
        basis.push(structure(&StructureFile::new(format!("{}.coder.{s}", l.name), Structure::Map(xi))));
    }
    Ok(with_input(Report::new("coder", Verdict::truth(report.is_valid())), &l)
        .detail("dim", space.dim())
        .bulky("basis", basis)
        .violations(&report))
}

fn cartan(arg: &str, index: usize, x: &str) -> Result<Report> {
    let l = load(arg)?;
    let f = resolve::focc(&l, index)?;
    let xm = resolve::cofield(x, f.carrier())?;
    let xd = cartan_map(&xm, &f)?;
    let c = f.carrier().over();
    let coder = coder_space(c)?;
    let coords = coalc::linalg::coords_in_span(&coder, &Coderivation::flatten_endomorphism(&xd))?;
    Ok(with_input(Report::new("cartan", Verdict::Holds), &l)
        .detail("x", x)
        .detail("is_coderivation", coords.is_some())
        .detail("coder_coords", coords.as_deref().map(rationals).unwrap_or(Value::Null))
        .bulky("image", structure(&StructureFile::new(format!("{}.cartan", l.name), Structure::Map(xd)))))
}

fn thm32(arg: &str, index: usize, x: Option<&str>) -> Result<Report> {
    let l = load(arg)?;
    let f = resolve::focc(&l, index)?;
    let u = f.carrier().clone();
    u.ensure_valid()?;
    let cofields: Vec<(String, LinearMapMatrix)> = match x {
        Some(x) => vec![(x.to_string(), resolve::cofield(x, &u)?)],
        None => {
            let cod = left_codual(&u)?;
            if cod.dim() == 0 {
                vec![("zero".into(), LinearMapMatrix::zero(u.dim(), u.over().dim()))]
            } else {
                (0..cod.dim()).map(|s| (format!("codual:{s}"), cod.basis_map(s))).collect()
            }
        }
    };
    let maps: Vec<LinearMapMatrix> = cofields.iter().map(|(_, m)| m.clone()).collect();
    let rep = verify_thm32(&u, &f, &maps)?;
    let checked: Vec<Value> = cofields
        .iter()
        .zip(&rep.deformed_leibniz)
        .map(|((name, _), r)| json!({"x": name, "deformed_leibniz": r.is_valid()}))
        .collect();
    let ok = rep.holds();
    let mut all = rep.comodule_map.clone();
    for r in rep.deformed_leibniz {
        all.merge(r);
    }
    Ok(with_input(Report::new("verify thm32", Verdict::truth(ok)), &l)
        .detail("focc_index", index)
        .detail("comodule_map", rep.comodule_map.is_valid())
        .detail("cofields", checked)
        .violations(&all))
}

fn thm33(arg: &str, index: usize) -> Result<Report> {
    let l = load(arg)?;
    let u_left = resolve::left_comodule(&l)?;
    let c: Arc<Coalgebra> = u_left.over().clone();
    let switch = Bicomodule::switch(u_left.clone());
    // Report the cocommutativity precondition before touching the switch
    // bicomodule, which need not be valid otherwise.
    let f = if c.is_cocommutative() {
        resolve::focc_on(switch, index)?
    } else {
        Focc::zero(switch)
    };
    let rep = verify_thm33(&c, &u_left, &f)?;
    let mut violations = ValidationReport::default();
    for (s, m) in rep.memberships.iter().enumerate() {
        if m.is_none() {
            violations.violations.push(coalc::Violation {
                axiom: "X^δ is a coderivation".into(),
                index: vec![s],
                lhs: coalc::rational::zero(),
                rhs: coalc::rational::one(),
            });
        }
    }
    let memberships: Vec<Value> = rep
        .memberships
        .iter()
        .map(|m| m.as_deref().map(rationals).unwrap_or(Value::Null))
        .collect();
    Ok(with_input(Report::new("verify thm33", Verdict::truth(rep.holds())), &l)
        .detail("focc_index", index)
        .detail("coder_dim", rep.coder_dim)
        .detail("codual_dim", rep.memberships.len())
        .detail("coder_coords", memberships)
        .violations(&violations))
}

fn probe(arg: &str, index: usize) -> Result<Report> {
    let l = load(arg)?;
    let f = resolve::focc(&l, index)?;
    let u = f.carrier().clone();
    let p = kahler_probe(u.over(), &u, &f)?;
    Ok(with_input(Report::new("probe", Verdict::Holds), &l)
        .detail("focc_index", index)
        .detail("codual_dim", p.codual_dim)
        .detail("coder_dim", p.coder_dim)
        .detail("rank", p.rank)
        .detail("kernel_dim", p.kernel_dim)
        .detail("image_in_coder", p.image_in_coder)
        .detail("injective", p.injective)
        .detail("surjective", p.surjective)
        .detail("cocommutative", p.cocommutative)
        .detail("summary", p.verdict()))
}

fn zoo_verb(action: ZooAction, name: Option<&str>) -> Result<Report> {
    match (action, name) {
        (ZooAction::List, None) => {
            let list: Vec<Value> = zoo::standard()
                .iter()
                .map(|c| json!({"name": c.name(), "dim": c.dim(), "cocommutative": c.is_cocommutative()}))
                .collect();
            Ok(Report::new("zoo list", Verdict::Holds).detail("coalgebras", list))
        }
        (ZooAction::Emit, Some(name)) => {
            let l = load(&format!("zoo:{name}"))?;
            let c = resolve::coalgebra(&l)?;
            let report = c.validate();
            Ok(with_input(Report::new("zoo emit", Verdict::validity(report.is_valid())), &l)
                .detail("structure", structure(&StructureFile::new(c.name().to_string(), Structure::Coalgebra(c))))
                .violations(&report))
        }
        (ZooAction::List, Some(_)) => bail!("zoo list takes no name"),
        (ZooAction::Emit, None) => bail!("zoo emit needs a name"),
    }
}
