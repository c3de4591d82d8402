use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use serde_json::{json, Value};

use ore_desing::desing::is_removing_operator;
use ore_desing::json::{
    certificate_from_json, certificate_to_json, multiple_from_json, multiple_to_json,
    operator_to_json,
};
use ore_desing::text::{format_operator, parse_operator, parse_poly};
use ore_desing::{
    analyze, construct_multiple, curve_bound, exponent_bound, find_left_multiple, region,
    removal_order_bound, try_remove_at, Analysis, Caps, CurveBlock, CurveSpec, OreOperator,
    OreRing, Poly, RemovalCertificate,
};

use crate::{Cli, Command, CurveArgs, RemoveArgs, EXIT_BREACH, EXIT_INFEASIBLE, EXIT_USAGE};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn infeasible(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INFEASIBLE,
            message: message.into(),
        }
    }

    fn breach(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_BREACH,
            message: message.into(),
        }
    }
}

impl From<ore_desing::Error> for CliError {
    fn from(e: ore_desing::Error) -> Self {
        let code = match e {
            ore_desing::Error::Internal(_) => EXIT_BREACH,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::usage(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

struct Ctx<'a> {
    cli: &'a Cli,
    ring: OreRing,
}

impl Ctx<'_> {
    fn operator(&self) -> Result<OreOperator> {
        let src = read_input(self.cli.op.as_deref())?;
        Ok(parse_operator(&src, self.ring)?)
    }

    fn hints(&self) -> Result<Vec<Poly>> {
        self.cli
            .factor_hints
            .iter()
            .map(|h| parse_poly(h).map_err(CliError::from))
            .collect()
    }

    fn caps(&self) -> Caps {
        Caps {
            n_cap: self.cli.n_cap,
            e_cap: self.cli.e_cap,
        }
    }

    fn analysis(&self, l: &OreOperator) -> Result<Analysis> {
        Ok(analyze(l, &self.hints()?, &self.caps())?)
    }
}

pub fn run(cli: &Cli) -> Result<String> {
    let ring = cli
        .ring
        .ok_or_else(|| CliError::usage("--ring shift|diff is required"))?;
    let ctx = Ctx { cli, ring };
    match &cli.command {
        Command::Parse => parse(&ctx),
        Command::Mul { right } => mul(&ctx, right),
        Command::Remove(args) => remove(&ctx, args),
        Command::Analyze => analyze_cmd(&ctx),
        Command::Curve(args) => curve(&ctx, args),
        Command::Region { r_max, d_max } => region_cmd(&ctx, *r_max, *d_max),
        Command::Multiple { r, d } => multiple(&ctx, *r, *d),
        Command::Verify { doc } => verify(&ctx, doc.as_deref()),
    }
}

fn describe(ring: OreRing, op: &OreOperator) -> Value {
    json!({
        "ring": ring.name(),
        "operator": operator_to_json(op),
        "order": op.order(),
        "degree": op.deg_x().ok(),
    })
}

fn parse(ctx: &Ctx) -> Result<String> {
    let l = ctx.operator()?;
    if ctx.cli.json {
        return Ok(pretty(&describe(ctx.ring, &l)));
    }
    Ok(format!("{}\n", format_operator(&l)))
}

fn mul(ctx: &Ctx, right: &Path) -> Result<String> {
    let l = ctx.operator()?;
    let r = parse_operator(&read_input(Some(right))?, ctx.ring)?;
    let prod = l.op_mul(&r)?;
    if ctx.cli.json {
        return Ok(pretty(&describe(ctx.ring, &prod)));
    }
    Ok(format!("{}\n", format_operator(&prod)))
}

fn remove(ctx: &Ctx, args: &RemoveArgs) -> Result<String> {
    let l = ctx.operator()?;
    let p = parse_poly(&args.factor)?;
    let k = args.power;
    let cert = match ctx.ring {
        OreRing::Shift => {
            let n = match args.order {
                Some(n) => n,
                None => removal_order_bound(&l, &p)?.ok_or_else(|| {
                    CliError::infeasible(format!(
                        "no non-negative shift of ({p}) meets the trailing coefficient"
                    ))
                })?,
            };
            let e = match args.exponent {
                Some(e) => e,
                None => exponent_bound(&l, &p, k, n)?,
            };
            try_remove_at(&l, &p, k, n, e)?
        }
        OreRing::Differential => search_diff(ctx, &l, &p, args)?,
    };
    let cert = cert
        .ok_or_else(|| CliError::infeasible(format!("({p})^{k} is not removable with these parameters")))?;
    Ok(pretty(&certificate_to_json(&l, &cert)))
}

fn search_diff(
    ctx: &Ctx,
    l: &OreOperator,
    p: &Poly,
    args: &RemoveArgs,
) -> Result<Option<RemovalCertificate>> {
    let k = args.power;
    let caps = ctx.caps();
    let n_cap = caps.n_cap.unwrap_or(2 * l.order0());
    let e_cap = caps.e_cap.unwrap_or(k + l.deg_x()? as u32).max(k);
    let orders: Vec<usize> = match args.order {
        Some(n) => vec![n],
        None => (0..=n_cap).collect(),
    };
    let exponents: Vec<u32> = match args.exponent {
        Some(e) => vec![e],
        None => (k..=e_cap).collect(),
    };
    for &n in &orders {
        for &e in &exponents {
            if let Some(c) = try_remove_at(l, p, k, n, e)? {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

fn analyze_cmd(ctx: &Ctx) -> Result<String> {
    let l = ctx.operator()?;
    let a = ctx.analysis(&l)?;
    if ctx.cli.tsv {
        let mut out = String::from("factor\tmultiplicity\tmax_power\torder\tverdict\n");
        for r in &a.reports {
            let order = r.certificates.last().map(|c| c.order.to_string());
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{:?}",
                r.factor,
                r.multiplicity,
                r.max_power_removable,
                order.as_deref().unwrap_or("NA"),
                r.verdict
            );
        }
        return Ok(out);
    }
    let reports: Vec<Value> = a
        .reports
        .iter()
        .map(|r| {
            json!({
                "factor": r.factor.to_string(),
                "multiplicity": r.multiplicity,
                "max_power_removable": r.max_power_removable,
                "order_bound": r.order_bound,
                "removing_order": r.certificates.last().map(|c| c.order),
                "verdict": format!("{:?}", r.verdict),
                "note": r.note,
            })
        })
        .collect();
    let dropped: Vec<Value> = a
        .dropped
        .iter()
        .map(|c| json!({ "factor": c.factor.to_string(), "power": c.power, "order": c.order }))
        .collect();
    Ok(pretty(&json!({
        "ring": ctx.ring.name(),
        "deg_x": a.spec.deg_x,
        "order": a.spec.order,
        "blocks": spec_blocks(&a.spec),
        "factors": reports,
        "dropped": dropped,
    })))
}

fn spec_blocks(spec: &CurveSpec) -> Vec<Value> {
    spec.blocks
        .iter()
        .map(|b| json!({ "deg": b.deg, "order": b.order }))
        .collect()
}

fn parse_block(s: &str) -> Result<CurveBlock> {
    let bad = || CliError::usage(format!("block `{s}` is not DEG:ORDER"));
    let (d, n) = s.split_once(':').ok_or_else(bad)?;
    Ok(CurveBlock {
        deg: d.trim().parse().map_err(|_| bad())?,
        order: n.trim().parse().map_err(|_| bad())?,
    })
}

fn curve(ctx: &Ctx, args: &CurveArgs) -> Result<String> {
    let spec = match (args.deg_x, args.order) {
        (Some(deg_x), Some(order)) => {
            let blocks = args
                .blocks
                .iter()
                .map(|b| parse_block(b))
                .collect::<Result<_>>()?;
            CurveSpec::new(deg_x, order, blocks)
        }
        _ => ctx.analysis(&ctx.operator()?)?.spec,
    };
    if args.r_max < spec.order {
        return Err(CliError::usage(format!(
            "--r-max {} is below the operator order {}",
            args.r_max, spec.order
        )));
    }
    let rows = (spec.order..=args.r_max)
        .map(|r| Ok((r, curve_bound(&spec, r)?)))
        .collect::<Result<Vec<_>>>()?;
    if ctx.cli.json {
        let pts: Vec<Value> = rows
            .iter()
            .map(|(r, d)| json!({ "r": r, "d_predicted": d }))
            .collect();
        return Ok(pretty(&json!({
            "deg_x": spec.deg_x,
            "order": spec.order,
            "blocks": spec_blocks(&spec),
            "curve": pts,
        })));
    }
    let mut out = String::from("r\td_predicted\n");
    for (r, d) in rows {
        let _ = writeln!(out, "{r}\t{d}");
    }
    Ok(out)
}

fn region_cmd(ctx: &Ctx, r_max: usize, d_max: usize) -> Result<String> {
    let l = ctx.operator()?;
    let spec = ctx.analysis(&l)?.spec;
    let st = region(&l, r_max, d_max)?;
    let mut rows = Vec::new();
    for &(r, d_min) in &st.entries {
        rows.push((r, d_min, curve_bound(&spec, r)?));
    }
    if ctx.cli.json {
        let pts: Vec<Value> = rows
            .iter()
            .map(|(r, d, p)| json!({ "r": r, "d_min": d, "d_predicted": p }))
            .collect();
        return Ok(pretty(&json!({ "d_max": d_max, "region": pts })));
    }
    let mut out = String::from("r\td_min\td_predicted\n");
    for (r, d, p) in rows {
        let d = d.map_or_else(|| "NA".to_string(), |d| d.to_string());
        let _ = writeln!(out, "{r}\t{d}\t{p}");
    }
    Ok(out)
}

fn multiple(ctx: &Ctx, r: usize, d: Option<usize>) -> Result<String> {
    let l = ctx.operator()?;
    let m = match d {
        Some(d) => find_left_multiple(&l, r, d)?.ok_or_else(|| {
            CliError::infeasible(format!("no left multiple of order <= {r} and degree <= {d}"))
        })?,
        None => {
            let a = ctx.analysis(&l)?;
            construct_multiple(&l, &a.certificates, r)?
        }
    };
    if ctx.cli.json {
        return Ok(pretty(&multiple_to_json(&l, &m)));
    }
    Ok(format!("{}\n", format_operator(&m)))
}

fn verify(ctx: &Ctx, doc: Option<&Path>) -> Result<String> {
    let text = read_input(doc)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("malformed document: {e}")))?;
    let doc_ring: OreRing = v
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::usage("malformed document: missing string field `ring`"))?
        .parse()?;
    if doc_ring != ctx.ring {
        return Err(CliError::usage(format!(
            "document is for the {} ring, --ring says {}",
            doc_ring, ctx.ring
        )));
    }
    if v.get("removing").is_some() {
        let (l, cert) = certificate_from_json(&v)?;
        cert.verify(&l).map_err(|e| CliError::breach(e.to_string()))?;
        if !is_removing_operator(&l, &cert.removing, &cert.block())? {
            return Err(CliError::breach("removing operator fails the definition check"));
        }
        Ok(format!(
            "ok: ({})^{} removable at order {}\n",
            cert.factor, cert.power, cert.order
        ))
    } else if v.get("multiple").is_some() {
        let (l, m) = multiple_from_json(&v)?;
        if m.is_zero() || !m.is_left_multiple(&l)? {
            return Err(CliError::breach("claimed operator is not a left multiple"));
        }
        let claimed = |k: &str| v.get(k).and_then(Value::as_u64);
        if claimed("order").is_some_and(|o| o != m.order0() as u64)
            || claimed("degree").is_some_and(|d| m.deg_x().ok() != Some(d as usize))
        {
            return Err(CliError::breach("recorded order or degree does not match the multiple"));
        }
        Ok(format!(
            "ok: left multiple of order {}{}\n",
            m.order0(),
            m.deg_x().map(|d| format!(", degree {d}")).unwrap_or_default()
        ))
    } else {
        Err(CliError::usage(
            "document is neither a certificate nor a multiple",
        ))
    }
}
