//! Argument parsing and command dispatch for the `qgroup` binary.

use clap::{Parser, Subcommand, ValueEnum};
use qgroup_core::affine::{self, EvalPoint, StringMultiset};
use qgroup_core::classical::{self, LieTensor};
use qgroup_core::hopf::{self, FiniteHopf, GroupTable};
use qgroup_core::rep::Representation;
use qgroup_core::uqsl2;
use qgroup_core::yangian::{self, QCharacter, ShiftParam};
use qgroup_core::{Error, Matrix, Scalar};
use serde_json::{json, Map, Value};
use std::time::Instant;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "qgroup", version, about = "Exact verification of quantum group identities")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Finite-dimensional Hopf algebras.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// 3-cocycles on a finite group.
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// U_q(sl2) at generic q.
    #[command(subcommand)]
    Uqsl2(Uqsl2Cmd),
    /// The classical limit.
    #[command(subcommand)]
    Classical(ClassicalCmd),
    /// U_q(affine sl2) evaluation modules.
    #[command(subcommand)]
    Affine(AffineCmd),
    /// The Yangian of sl2.
    #[command(subcommand)]
    Yangian(YangianCmd),
}

#[derive(Subcommand, Debug)]
pub enum HopfCmd {
    /// Check every Hopf axiom on a built-in algebra or a JSON file.
    Verify { target: String },
    /// Build the Drinfeld double and check its quasitriangular structure.
    Double { target: String },
    /// The small quantum group at an odd root of unity.
    SmallQgroup {
        #[arg(long)]
        ell: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CocycleCmd {
    Check {
        #[arg(long)]
        group: String,
        #[arg(long)]
        alpha: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum Uqsl2Cmd {
    /// Decompose a tensor product of irreducibles, e.g. `--factors 1,2`.
    Decompose {
        #[arg(long, value_delimiter = ',', required = true)]
        factors: Vec<usize>,
    },
    /// The universal R-matrix acting on L_x ⊗ L_y.
    Rmatrix {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
    },
    /// Hexagons, QYBE and the braid relation on L_m^{⊗3}.
    BraidCheck {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ClassicalCmd {
    Cybe,
    Cobracket,
    Yang,
}

#[derive(Subcommand, Debug)]
pub enum AffineCmd {
    /// Split a multiset such as `z:0,1,2` (steps of q²) into strings.
    Strings {
        #[arg(long)]
        multiset: String,
    },
    /// Irreducibility of `⊗ V_m(z)`, factors like `1:z,1:z*q^2`.
    Irreducible {
        #[arg(long)]
        factors: String,
    },
    /// The normalized R-matrix R(z).
    Rmatrix {
        #[arg(long, default_value = "z")]
        z: String,
        #[arg(long)]
        check: bool,
    },
    DrinfeldPoly {
        #[arg(long)]
        factors: String,
        #[arg(long, default_value = "x")]
        var: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum YangianCmd {
    /// FRT relation and central qdet on the evaluation module of dimension d.
    Frt {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "a")]
        a: String,
    },
    Qchar {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "a")]
        a: String,
    },
    /// Dominant monomials of a product such as `1:a,1:a+1`.
    Dominant {
        #[arg(long)]
        product: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub timing_ms: u128,
}

impl CommandResult {
    pub fn error(msg: impl Into<String>) -> Self {
        CommandResult { status: Status::Error, payload: json!({ "error": msg.into() }), timing_ms: 0 }
    }

    pub fn to_json(&self) -> Value {
        json!({ "status": self.status.as_str(), "payload": self.payload, "timing_ms": self.timing_ms as u64 })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string(&self.to_json()).expect("json values serialize"),
            Format::Text => {
                let mut out = format!("status: {}\n", self.status.as_str());
                if let Value::Object(m) = &self.payload {
                    for (k, v) in m {
                        out.push_str(&format!("{k}: {}\n", text_value(v)));
                    }
                }
                out.push_str(&format!("timing_ms: {}\n", self.timing_ms));
                out
            }
        }
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(text_value).collect::<Vec<_>>().join(", "),
        Value::Object(m) if m.contains_key("text") => text_value(&m["text"]),
        other => other.to_string(),
    }
}

/// A verdict: the payload plus the names of any violated identities.
struct Outcome {
    payload: Map<String, Value>,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { payload: Map::new(), failures: Vec::new() }
    }

    fn set(mut self, k: &str, v: impl Into<Value>) -> Self {
        self.payload.insert(k.to_string(), v.into());
        self
    }

    /// Records `"pass"`/`"fail"` under `k`.
    fn check(mut self, k: &str, ok: bool) -> Self {
        if !ok {
            self.failures.push(k.to_string());
        }
        self.set(k, if ok { "pass" } else { "fail" })
    }
}

type CmdResult = Result<Outcome, Error>;

pub fn parse<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(argv)
}

/// Parses and runs; parse failures become `error` results.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse(argv) {
        Ok(cli) => execute(&cli.command),
        Err(e) => CommandResult::error(e.to_string().trim().to_string()),
    }
}

pub fn execute(cmd: &Command) -> CommandResult {
    let start = Instant::now();
    let out = match cmd {
        Command::Hopf(c) => hopf_cmd(c),
        Command::Cocycle(CocycleCmd::Check { group, alpha }) => cocycle_check(group, alpha),
        Command::Uqsl2(c) => uqsl2_cmd(c),
        Command::Classical(c) => classical_cmd(c),
        Command::Affine(c) => affine_cmd(c),
        Command::Yangian(c) => yangian_cmd(c),
    };
    let timing_ms = start.elapsed().as_millis();
    match out {
        Ok(o) => {
            let status = if o.failures.is_empty() { Status::Ok } else { Status::Fail };
            let mut payload = o.payload;
            if status == Status::Fail {
                payload.insert("failures".into(), json!(o.failures));
            }
            CommandResult { status, payload: Value::Object(payload), timing_ms }
        }
        Err(e) => CommandResult { timing_ms, ..CommandResult::error(e.to_string()) },
    }
}

fn read_file(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
}

fn read_json(path: &str) -> Result<Value, Error> {
    serde_json::from_str(&read_file(path)?).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn suffix_num(s: &str, prefix: &str) -> Option<usize> {
    s.strip_prefix(prefix).and_then(|n| n.parse().ok()).filter(|&n| n > 0)
}

/// Built-in names: `CZn`, `OZn`, `CS3`, `OS3`, `taftN`, `sweedler`,
/// `nicholsN`, `uqb+L`, `uqb-L`; anything ending in `.json` is read as a file.
pub fn resolve_algebra(target: &str) -> Result<FiniteHopf, Error> {
    if target.ends_with(".json") {
        return FiniteHopf::from_json_str(&read_file(target)?);
    }
    let unknown = || Error::Parse(format!("unknown algebra {target:?}"));
    let h = if let Some(n) = suffix_num(target, "CZ") {
        hopf::build_group_algebra(&GroupTable::cyclic(n))
    } else if let Some(n) = suffix_num(target, "OZ") {
        hopf::build_function_algebra(&GroupTable::cyclic(n))
    } else if target == "CS3" {
        hopf::build_group_algebra(&GroupTable::symmetric3())
    } else if target == "OS3" {
        hopf::build_function_algebra(&GroupTable::symmetric3())
    } else if target == "sweedler" {
        hopf::build_taft(2, &Scalar::int(-1))?
    } else if let Some(n) = suffix_num(target, "taft") {
        hopf::build_taft(n, &hopf::zoo::root_of_unity(n)?)?
    } else if let Some(n) = suffix_num(target, "nichols") {
        hopf::build_nichols(n)?
    } else if let Some(l) = suffix_num(target, "uqb+") {
        hopf::build_uq_borel_plus(l)?
    } else if let Some(l) = suffix_num(target, "uqb-") {
        hopf::build_uq_borel_minus(l)?
    } else {
        return Err(unknown());
    };
    Ok(h)
}

fn hopf_cmd(c: &HopfCmd) -> CmdResult {
    match c {
        HopfCmd::Verify { target } => {
            let h = resolve_algebra(target)?;
            let rep = hopf::verify_hopf_axioms(&h);
            let mut o = Outcome::new().set("name", h.name()).set("dim", h.dim()).set("axioms", if rep.passed { "pass" } else { "fail" });
            o.failures = rep.failed_axioms;
            Ok(o)
        }
        HopfCmd::Double { target } => {
            let h = resolve_algebra(target)?;
            let d = hopf::drinfeld_double(&h)?;
            let rep = hopf::quasitriangular_check(&d.hopf, &d.r);
            let mut o = Outcome::new().set("name", format!("D({})", h.name())).set("dim", d.hopf.dim());
            for (k, ok) in [
                ("invertible", rep.invertible),
                ("intertwines_coproduct", rep.intertwines_coproduct),
                ("hexagon_left", rep.hexagon_left),
                ("hexagon_right", rep.hexagon_right),
                ("qybe", rep.qybe),
                ("inverse_is_antipode", rep.inverse_is_antipode),
            ] {
                o = o.check(k, ok);
            }
            Ok(o)
        }
        HopfCmd::SmallQgroup { ell } => {
            let s = hopf::small_quantum_group(*ell)?;
            let h = s.hopf();
            let qybe = hopf::quasitriangular_check(h, &s.r).qybe;
            Ok(Outcome::new()
                .set("dim", h.dim())
                .set("double_dim", s.double.hopf.dim())
                .check("ef_relation", s.ef_relation_holds())
                .check("r_closed_form", s.r == s.closed_form_r())
                .check("qybe", qybe))
        }
    }
}

/// Group file `{"labels": [...], "mul": [[...]]}`; alpha file a list of `n³`
/// canonical scalars (or `{"values": [...]}`) indexed by `(a·n + b)·n + c`.
fn cocycle_check(group: &str, alpha: &str) -> CmdResult {
    let g = read_json(group)?;
    let labels: Vec<String> = serde_json::from_value(g["labels"].clone()).map_err(|e| Error::Parse(format!("group labels: {e}")))?;
    let mul: Vec<Vec<usize>> = serde_json::from_value(g["mul"].clone()).map_err(|e| Error::Parse(format!("group mul: {e}")))?;
    let g = GroupTable::new(labels, mul)?;
    let a = read_json(alpha)?;
    let vals = a.get("values").unwrap_or(&a);
    let strs: Vec<String> = serde_json::from_value(vals.clone()).map_err(|e| Error::Parse(format!("alpha values: {e}")))?;
    let alpha: Vec<Scalar> = strs.iter().map(|s| Scalar::parse(s)).collect::<Result<_, _>>()?;
    let ok = hopf::pentagon_cocycle_check(&g, &alpha)?;
    let mut o = Outcome::new().set("order", g.order()).check("pentagon", ok);
    if !ok {
        let n = g.order();
        let al = |a: usize, b: usize, c: usize| &alpha[(a * n + b) * n + c];
        let mut bad = Vec::new();
        for i in 0..n * n * n * n {
            let (a, b, c, d) = (i / (n * n * n), i / (n * n) % n, i / n % n, i % n);
            let lhs = &(al(b, c, d) * al(a, g.m(b, c), d)) * al(a, b, c);
            let rhs = al(g.m(a, b), c, d) * al(a, b, g.m(c, d));
            if lhs != rhs {
                bad.push(format!("({},{},{},{})", g.labels[a], g.labels[b], g.labels[c], g.labels[d]));
            }
        }
        o = o.set("violations", bad);
    }
    Ok(o)
}

fn matrix_json(m: &Matrix) -> Value {
    json!(m.to_rows().iter().map(|r| r.iter().map(Scalar::canonical).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn uqsl2_cmd(c: &Uqsl2Cmd) -> CmdResult {
    match c {
        Uqsl2Cmd::Decompose { factors } => {
            let mut it = factors.iter();
            let first = it.next().ok_or_else(|| Error::Parse("--factors is empty".into()))?;
            let mut x: Representation = uqsl2::irrep(*first);
            for m in it {
                x = x.tensor(&uqsl2::irrep(*m))?;
            }
            Ok(Outcome::new().set("summands", uqsl2::decompose_type_I(&x)?))
        }
        Uqsl2Cmd::Rmatrix { x, y } => {
            let r = uqsl2::universal_r_action(&uqsl2::irrep(*x), &uqsl2::irrep(*y))?;
            Ok(Outcome::new().set("dim", r.rows()).set("matrix", matrix_json(&r)))
        }
        Uqsl2Cmd::BraidCheck { m } => {
            let v = uqsl2::irrep(*m);
            let r = uqsl2::braiding_checks(&v, &v, &v)?;
            Ok(Outcome::new()
                .check("intertwiner", r.intertwiner)
                .check("hexagon_left", r.hexagon_left)
                .check("hexagon_right", r.hexagon_right)
                .check("qybe", r.qybe)
                .check("braid", r.braid))
        }
    }
}

fn classical_cmd(c: &ClassicalCmd) -> CmdResult {
    let r = LieTensor::standard_r();
    match c {
        ClassicalCmd::Cybe => {
            let defect = classical::cybe_defect(&r)?;
            let sym = r.add(&r.flip());
            Ok(Outcome::new().set("r", r.to_string()).set("defect", defect.to_string()).check("cybe", defect.is_zero()).check("casimir_invariance", classical::casimir_invariance(&sym)?))
        }
        ClassicalCmd::Cobracket => {
            let rep = classical::cobracket_checks(&r)?;
            let mut o = Outcome::new().check("skew", rep.skew).check("cocycle", rep.cocycle).check("co_jacobi", rep.co_jacobi);
            if let Some(c) = rep.e_constant {
                o = o.set("delta_e", format!("{} e^h", c.canonical()));
            }
            Ok(o)
        }
        ClassicalCmd::Yang => Ok(Outcome::new().check("yang_cybe", classical::yang_cybe_check())),
    }
}

/// `m:point,m:point,…` such as `1:z,2:z*q^4`.
pub fn parse_eval_factors(spec: &str) -> Result<Vec<(usize, EvalPoint)>, Error> {
    split_factors(spec)?.into_iter().map(|(m, p)| Ok((m, EvalPoint::parse(p)?))).collect()
}

/// `m:shift,m:shift,…` such as `1:a,1:a+1`.
pub fn parse_shift_factors(spec: &str) -> Result<Vec<(usize, ShiftParam)>, Error> {
    split_factors(spec)?.into_iter().map(|(m, p)| Ok((m, ShiftParam::parse(p)?))).collect()
}

fn split_factors(spec: &str) -> Result<Vec<(usize, &str)>, Error> {
    let out = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|part| {
            let (m, p) = part.split_once(':').ok_or_else(|| Error::Parse(format!("expected m:point in {part:?}")))?;
            let m: usize = m.trim().parse().map_err(|_| Error::Parse(format!("bad highest weight {m:?}")))?;
            Ok((m, p.trim()))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    if out.is_empty() {
        return Err(Error::Parse("no factors given".into()));
    }
    Ok(out)
}

fn affine_cmd(c: &AffineCmd) -> CmdResult {
    match c {
        AffineCmd::Strings { multiset } => {
            let strings = affine::decompose_into_strings(&StringMultiset::parse(multiset)?);
            Ok(Outcome::new()
                .set("strings", strings.iter().map(|s| s.to_string()).collect::<Vec<_>>())
                .set("lengths", strings.iter().map(|s| s.length).collect::<Vec<_>>()))
        }
        AffineCmd::Irreducible { factors } => {
            let f = parse_eval_factors(factors)?;
            let strings = f.iter().map(|(m, z)| affine::string_of(*m, z).map(|s| s.to_string())).collect::<Result<Vec<_>, _>>()?;
            Ok(Outcome::new().set("strings", strings).set("irreducible", affine::irreducibility_test(&f)?))
        }
        AffineCmd::Rmatrix { z, check } => {
            let r = affine::trig_r_matrix(&Scalar::parse(z)?)?;
            let mut o = Outcome::new().set("matrix", matrix_json(&r));
            if *check {
                let rep = affine::spectral_checks()?;
                o = o.check("unitarity", rep.unitarity).check("qybe", rep.qybe).check("intertwiner", rep.intertwiner);
            }
            Ok(o)
        }
        AffineCmd::DrinfeldPoly { factors, var } => {
            let p = affine::drinfeld_polynomial(&parse_eval_factors(factors)?, var)?;
            Ok(Outcome::new().set("polynomial", p.canonical()))
        }
    }
}

fn qchar_payload(chi: &QCharacter) -> Value {
    json!({ "text": chi.to_string(), "terms": chi.to_json()["terms"] })
}

fn yangian_cmd(c: &YangianCmd) -> CmdResult {
    match c {
        YangianCmd::Frt { dim, a } => {
            if *dim == 0 {
                return Err(Error::Domain("dimension must be positive".into()));
            }
            let w = yangian::yangian_eval_module(dim - 1, &ShiftParam::parse(a)?.to_scalar());
            let t = yangian::evaluation_T(&w, 6);
            Ok(Outcome::new().set("dim", *dim).check("frt", yangian::frt_check(&t)?).check("qdet_central", yangian::qdet_is_central(&t, 6)?))
        }
        YangianCmd::Qchar { m, a } => {
            let a = ShiftParam::parse(a)?;
            let chi = yangian::qchar_from_module(*m, &a)?;
            let closed = yangian::qchar_closed_form(*m, &a);
            Ok(Outcome::new().set("qchar", qchar_payload(&chi)).set("dimension", chi.dimension()).check("closed_form", chi == closed))
        }
        YangianCmd::Dominant { product } => {
            let f = parse_shift_factors(product)?;
            let chi = f.iter().fold(QCharacter::one(), |acc, (m, a)| yangian::qchar_multiply(&acc, &yangian::qchar_closed_form(*m, a)));
            let dom = yangian::dominant_monomials(&chi);
            Ok(Outcome::new().set("product", qchar_payload(&chi)).set("dominant", dom.iter().map(|m| m.to_string()).collect::<Vec<_>>()).set("count", dom.len()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_specs() {
        let f = parse_eval_factors("1:z, 2:z*q^4").unwrap();
        assert_eq!(f, vec![(1, EvalPoint::symbol("z")), (2, EvalPoint::new("z", 4))]);
        assert!(parse_eval_factors("").is_err());
        assert!(parse_eval_factors("z").is_err());
        assert!(parse_eval_factors("x:z").is_err());
        let s = parse_shift_factors("1:a,1:a+1").unwrap();
        assert_eq!(s[1].1, ShiftParam::symbol("a").shift(&qgroup_core::Rational::ONE));
    }

    #[test]
    fn algebra_names() {
        for (name, dim) in [("CZ2", 2), ("OZ3", 3), ("CS3", 6), ("taft3", 9), ("sweedler", 4), ("nichols2", 8), ("uqb+3", 9)] {
            assert_eq!(resolve_algebra(name).unwrap().dim(), dim, "{name}");
        }
        for bad in ["CZ0", "foo", "taftx"] {
            assert!(resolve_algebra(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn verdicts_and_exit_codes() {
        let r = run(["qgroup", "classical", "yang"]);
        assert_eq!((r.status, r.status.exit_code()), (Status::Ok, 0));
        let r = run(["qgroup", "affine", "strings"]);
        assert_eq!((r.status, r.status.exit_code()), (Status::Error, 2));
        assert_eq!(Status::Fail.exit_code(), 1);
        let text = run(["qgroup", "uqsl2", "decompose", "--factors", "2,2"]).render(Format::Text);
        assert!(text.starts_with("status: ok\nsummands: 0, 2, 4\n"), "{text}");
    }
}
