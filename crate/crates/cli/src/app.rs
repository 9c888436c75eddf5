//! Command dispatch: argv in, exit code and report text out.
//!
//! Exit codes: 0 success (verify: all checks pass), 1 verification failure,
//! 2 usage error or malformed input file, 3 enumeration budget exceeded.

use std::collections::BTreeMap;

use rankcode_core::amrd::{self, SubsetMode};
use rankcode_core::circulant::{poly_gcd, CirculantRankCode, CirculantWord};
use rankcode_core::code::LinearRdCode;
use rankcode_core::extremal::{
    a_search, covering_radius, exact_min_k, multi_covering_radius, sphere_bound_min_k, CoverMode,
    SearchMode, SphereBound,
};
use rankcode_core::field::poly_string;
use rankcode_core::fuzzy::{self, ErrorModel};
use rankcode_core::mrd::{gabidulin, mrd_spectrum, nondivisibility_witness};
use rankcode_core::rank_metric::{rank_distance, rank_norm};
use rankcode_core::{EnumBudget, Error as CoreError, FieldContext, FieldElement};

use crate::format::{
    ensemble_from_blocks, parse_code_file, parse_ensemble_file, parse_poly, parse_word,
    word_to_string, CodeDefinition,
};
use crate::report::{Report, Table};
use crate::verify::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { exit_code: EXIT_OK, stdout, stderr: String::new() }
    }
}

enum CmdError {
    Usage(String),
    Budget(String),
}

type CmdResult = Result<String, CmdError>;

impl From<CoreError> for CmdError {
    fn from(err: CoreError) -> CmdError {
        match err {
            CoreError::BudgetExceeded { .. } => CmdError::Budget(err.to_string()),
            other => CmdError::Usage(other.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> CmdError {
    CmdError::Usage(msg.into())
}

/// Parsed argv: leading bare words form the command path, the rest are
/// `--flag value...` groups.
struct Parsed {
    command: Vec<String>,
    flags: BTreeMap<String, Vec<String>>,
}

impl Parsed {
    fn parse(args: &[String]) -> Parsed {
        let mut command = Vec::new();
        let mut flags: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let mut current: Option<String> = None;
        for token in args {
            if let Some(name) = token.strip_prefix("--") {
                flags.entry(name.to_string()).or_default();
                current = Some(name.to_string());
            } else if let Some(flag) = &current {
                flags.get_mut(flag).expect("flag registered").push(token.clone());
            } else {
                command.push(token.clone());
            }
        }
        Parsed { command, flags }
    }

    fn has(&self, name: &str) -> bool {
        self.flags.contains_key(name)
    }

    fn values(&self, name: &str) -> &[String] {
        self.flags.get(name).map(Vec::as_slice).unwrap_or(&[])
    }

    fn value(&self, name: &str) -> Option<&str> {
        self.values(name).first().map(String::as_str)
    }

    fn require(&self, name: &str) -> Result<&str, CmdError> {
        self.value(name).ok_or_else(|| usage(format!("missing required flag --{name}")))
    }

    fn number(&self, name: &str) -> Result<usize, CmdError> {
        let text = self.require(name)?;
        text.parse().map_err(|_| usage(format!("--{name} must be a number, found '{text}'")))
    }

    fn number_or(&self, name: &str, default: usize) -> Result<usize, CmdError> {
        match self.value(name) {
            None => Ok(default),
            Some(text) => text
                .parse()
                .map_err(|_| usage(format!("--{name} must be a number, found '{text}'"))),
        }
    }

    fn float(&self, name: &str) -> Result<f64, CmdError> {
        let text = self.require(name)?;
        text.parse().map_err(|_| usage(format!("--{name} must be a number, found '{text}'")))
    }

    fn tsv(&self) -> bool {
        self.has("tsv")
    }

    fn budget(&self) -> Result<EnumBudget, CmdError> {
        if let Some(text) = self.value("max-enum-bits") {
            let bits = text
                .parse()
                .map_err(|_| usage(format!("--max-enum-bits must be a number, found '{text}'")))?;
            return Ok(EnumBudget::bits(bits));
        }
        if let Ok(text) = std::env::var("RANKCODE_MAX_ENUM_BITS") {
            let bits = text.parse().map_err(|_| {
                usage(format!("RANKCODE_MAX_ENUM_BITS must be a number, found '{text}'"))
            })?;
            return Ok(EnumBudget::bits(bits));
        }
        Ok(EnumBudget::default())
    }

    fn read_file(&self, name: &str) -> Result<String, CmdError> {
        let path = self.require(name)?;
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
    }

    fn code_definition(&self, name: &str) -> Result<CodeDefinition, CmdError> {
        let text = self.read_file(name)?;
        parse_code_file(&text).map_err(|e| usage(e.to_string()))
    }

    fn field(&self) -> Result<FieldContext, CmdError> {
        let degree = self.number("N")?;
        let modulus = match self.value("poly") {
            None => None,
            Some(text) => Some(parse_poly(text).map_err(CmdError::Usage)? as u32),
        };
        Ok(FieldContext::new(degree, modulus)?)
    }

    fn model(&self) -> Result<ErrorModel, CmdError> {
        let p = self.float("p")?;
        let model = match self.require("model")? {
            "symmetric" => ErrorModel::Symmetric { p },
            "unidirectional" => ErrorModel::Unidirectional { p },
            "asymmetric-1to0" => ErrorModel::AsymmetricOneToZero { p },
            "asymmetric-0to1" => ErrorModel::AsymmetricZeroToOne { p },
            other => {
                return Err(usage(format!(
                    "unknown model '{other}' (symmetric, unidirectional, asymmetric-1to0, asymmetric-0to1)"
                )))
            }
        };
        model.validate()?;
        Ok(model)
    }
}

pub fn run(args: &[String]) -> Outcome {
    let parsed = Parsed::parse(args);
    let path: Vec<&str> = parsed.command.iter().map(String::as_str).collect();
    let result = match path.as_slice() {
        ["field", "info"] => field_info(&parsed),
        ["code", "analyze"] => code_analyze(&parsed),
        ["code", "decode"] => code_decode(&parsed),
        ["code", "product"] => code_product(&parsed),
        ["code", "fold"] => code_fold(&parsed),
        ["mrd", "new"] => mrd_new(&parsed),
        ["mrd", "spectrum"] => mrd_spectrum_cmd(&parsed),
        ["mrd", "witness"] => mrd_witness(&parsed),
        ["circulant", "norm"] => circulant_norm(&parsed),
        ["circulant", "code"] => circulant_code(&parsed),
        ["amrd", "check"] => amrd_check(&parsed),
        ["amrd", "build"] => amrd_build(&parsed),
        ["amrd", "compare"] => amrd_compare(&parsed),
        ["extremal", "a"] => extremal_a(&parsed),
        ["extremal", "bound"] => extremal_bound(&parsed),
        ["extremal", "minK"] => extremal_min_k(&parsed),
        ["covering", "radius"] => covering_radius_cmd(&parsed),
        ["covering", "multi"] => covering_multi(&parsed),
        ["covering", "sphere-bound"] => covering_sphere_bound(&parsed),
        ["fuzzy", "decode"] => fuzzy_decode(&parsed),
        ["fuzzy", "mindist"] => fuzzy_mindist(&parsed),
        ["mcode", "classify"] => mcode_classify(&parsed),
        ["mcode", "analyze"] => mcode_analyze(&parsed),
        ["verify"] => return verify_cmd(&parsed),
        [] => Err(usage(top_level_usage())),
        other => {
            Err(usage(format!("unknown command '{}'\n{}", other.join(" "), top_level_usage())))
        }
    };
    match result {
        Ok(stdout) => Outcome::ok(stdout),
        Err(CmdError::Usage(msg)) => Outcome {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(CmdError::Budget(msg)) => Outcome {
            exit_code: EXIT_BUDGET,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn top_level_usage() -> String {
    "usage: rankcode <command> [flags]\n\
     commands:\n\
     \x20 field info            --N <deg> [--poly <hex|symbolic>]\n\
     \x20 code analyze          --file <code>\n\
     \x20 code decode           --file <code> --word <hex...>\n\
     \x20 code product          --file <code> --other <code>\n\
     \x20 code fold             --file <code> --r <count>\n\
     \x20 mrd new               --N <deg> --n <len> --k <dim> [--g <hex...>]\n\
     \x20 mrd spectrum          --n <len> --k <dim> --N <deg> [--q <base>]\n\
     \x20 mrd witness           --n <len> --k <dim> --N <deg> [--q <base>]\n\
     \x20 circulant norm        --N <len> --poly <hex|symbolic>\n\
     \x20 circulant code        --N <len> --basis <hex...>\n\
     \x20 amrd check            --file <H> [--mode disjoint|distinct]\n\
     \x20 amrd build            --file <H> [--mode disjoint|distinct]\n\
     \x20 amrd compare          --n <len> --k <dim> --N <deg>\n\
     \x20 extremal a            --n <len> --r <rank> --d <dist> --N <deg> [--exact|--greedy] [--witness]\n\
     \x20 extremal bound        --n <len> --d <dist> --N <deg>\n\
     \x20 extremal minK         --n <len> --t <radius> --m <mult> --N <deg>\n\
     \x20 covering radius       --code <code>\n\
     \x20 covering multi        --code <code> --m <mult> [--exact | --samples <count> --seed <seed>]\n\
     \x20 covering sphere-bound --n <len> --t <radius> --m <mult> --N <deg>\n\
     \x20 fuzzy decode          --code <code> --word <hex...> --model <model> --p <prob>\n\
     \x20 fuzzy mindist         --code <code> --model <model> --p <prob>\n\
     \x20 mcode classify        --file <ensemble>\n\
     \x20 mcode analyze         --file <ensemble> [--m <mult...>]\n\
     \x20 verify                --suite <id>\n\
     global flags: --tsv, --max-enum-bits <bits> (or RANKCODE_MAX_ENUM_BITS), --seed <seed>"
        .to_string()
}

fn field_info(args: &Parsed) -> CmdResult {
    let ctx = args.field()?;
    let mut r = Report::new();
    r.push("degree", ctx.degree());
    r.push("order", ctx.order());
    r.push("modulus-hex", format!("{:x}", ctx.modulus()));
    r.push("modulus-poly", ctx.modulus_poly_string());
    Ok(r.render(args.tsv()))
}

fn code_report(code: &LinearRdCode, budget: EnumBudget, tsv: bool) -> CmdResult {
    let report = code.classify(budget)?;
    let mut r = Report::new();
    r.push("field", format!("GF(2^{})", code.context().degree()));
    r.push("modulus", poly_string(code.context().modulus()));
    r.push("n", report.n);
    r.push("k", report.k);
    r.push("min-rank-distance", report.d);
    r.push("correction-radius", report.t);
    r.push("mrd", report.is_mrd);
    r.push("amrd", report.is_amrd);
    r.push("divisor", report.divisor);
    let mut out = r.render(tsv);
    let mut table = Table::new(&["rank", "codewords"]);
    for (s, &count) in code.rank_distribution(budget)?.iter().enumerate() {
        if count > 0 {
            table.push(vec![s.to_string(), count.to_string()]);
        }
    }
    if !tsv {
        out.push('\n');
    }
    out.push_str(&table.render(tsv));
    Ok(out)
}

fn code_analyze(args: &Parsed) -> CmdResult {
    let code = args.code_definition("file")?.code()?;
    code_report(&code, args.budget()?, args.tsv())
}

fn code_decode(args: &Parsed) -> CmdResult {
    let code = args.code_definition("file")?.code()?;
    let word = parse_word(code.context(), args.values("word")).map_err(CmdError::Usage)?;
    let decoded = code.decode_nearest(&word, args.budget()?)?;
    let mut r = Report::new();
    r.push("received", word_to_string(&word));
    r.push("codeword", word_to_string(&decoded.codeword));
    r.push("distance", decoded.distance);
    r.push("unique", decoded.unique);
    Ok(r.render(args.tsv()))
}

fn code_product(args: &Parsed) -> CmdResult {
    let left = args.code_definition("file")?.code()?;
    let right = args.code_definition("other")?.code()?;
    let product = left.cartesian_product(&right)?;
    code_report(&product, args.budget()?, args.tsv())
}

fn code_fold(args: &Parsed) -> CmdResult {
    let code = args.code_definition("file")?.code()?;
    let folds = args.number("r")?;
    let folded = code.fold_repetition(folds)?;
    code_report(&folded, args.budget()?, args.tsv())
}

fn mrd_new(args: &Parsed) -> CmdResult {
    let ctx = args.field()?;
    let n = args.number("n")?;
    let k = args.number("k")?;
    let generators: Vec<FieldElement> = if args.has("g") {
        let tokens = args.values("g");
        if tokens.len() != n {
            return Err(usage(format!("--g needs exactly {n} elements")));
        }
        let word = parse_word(ctx, tokens).map_err(CmdError::Usage)?;
        (0..n).map(|j| word.coord(j)).collect()
    } else {
        (0..n)
            .map(|i| ctx.element(1 << i))
            .collect::<Result<_, _>>()
            .map_err(|_| usage(format!("default generating vector needs n <= N, got n={n}")))?
    };
    let code = gabidulin(&generators, k)?;
    let tsv = args.tsv();
    let mut out = String::new();
    let mut table = Table::new(&["generator-row", "entries"]);
    for i in 0..code.dim() {
        table.push(vec![i.to_string(), word_to_string(&code.generator().row_vector(i))]);
    }
    out.push_str(&table.render(tsv));
    if !tsv {
        out.push('\n');
    }
    out.push_str(&code_report(&code, args.budget()?, tsv)?);
    Ok(out)
}

fn mrd_spectrum_cmd(args: &Parsed) -> CmdResult {
    let n = args.number("n")?;
    let k = args.number("k")?;
    let ext = args.number("N")?;
    let q = args.number_or("q", 2)? as u64;
    let table = mrd_spectrum(n, k, q, ext)?;
    let mut out = Table::new(&["s", "A_s"]);
    for (s, count) in table.counts.iter().enumerate() {
        out.push(vec![s.to_string(), count.to_string()]);
    }
    let mut text = out.render(args.tsv());
    let mut summary = Report::new();
    summary.push("d", table.d);
    summary.push("total", table.total());
    if !args.tsv() {
        text.push('\n');
    }
    text.push_str(&summary.render(args.tsv()));
    Ok(text)
}

fn mrd_witness(args: &Parsed) -> CmdResult {
    let n = args.number("n")?;
    let k = args.number("k")?;
    let ext = args.number("N")?;
    let q = args.number_or("q", 2)? as u64;
    let (a_d, a_d1) = nondivisibility_witness(n, k, q, ext)?;
    let d = n - k + 1;
    let mut r = Report::new();
    r.push("d", d);
    r.push(format!("A_{d}"), &a_d);
    r.push(format!("A_{}", d + 1), &a_d1);
    r.push("adjacent-ranks-coprime", true);
    r.push("divisible", false);
    Ok(r.render(args.tsv()))
}

fn circulant_norm(args: &Parsed) -> CmdResult {
    let len = args.number("N")?;
    let poly = parse_poly(args.require("poly")?).map_err(CmdError::Usage)?;
    let word = CirculantWord::new(len, poly)?;
    let modulus = word.ring_modulus();
    let g = if word.is_zero() { modulus } else { poly_gcd(poly, modulus)? };
    let mut r = Report::new();
    r.push("word-hex", format!("{poly:x}"));
    r.push("word-poly", poly_string(poly as u32));
    r.push("ring-modulus", poly_string(modulus as u32));
    r.push("gcd", poly_string(g as u32));
    r.push("norm", word.norm());
    r.push("matrix-rank", word.norm_via_rank());
    Ok(r.render(args.tsv()))
}

fn circulant_code(args: &Parsed) -> CmdResult {
    let len = args.number("N")?;
    let tokens = args.values("basis");
    if tokens.is_empty() {
        return Err(usage("--basis needs at least one word"));
    }
    let mut basis = Vec::with_capacity(tokens.len());
    for t in tokens {
        let poly = parse_poly(t).map_err(CmdError::Usage)?;
        basis.push(CirculantWord::new(len, poly)?);
    }
    let code = CirculantRankCode::new(&basis)?;
    let mut r = Report::new();
    r.push("length", code.len());
    r.push("dimension", code.dim());
    r.push("words", 1u64 << code.dim());
    r.push("min-distance", code.min_distance());
    r.push("cyclic", code.is_cyclic());
    r.push("divisor", code.divisor());
    Ok(r.render(args.tsv()))
}

fn subset_mode(args: &Parsed) -> Result<SubsetMode, CmdError> {
    match args.value("mode") {
        None | Some("disjoint") => Ok(SubsetMode::Disjoint),
        Some("distinct") => Ok(SubsetMode::Distinct),
        Some(other) => Err(usage(format!("unknown mode '{other}' (disjoint, distinct)"))),
    }
}

fn mask_to_set(mask: u32) -> String {
    let cols: Vec<String> =
        (0..32).filter(|b| mask >> b & 1 != 0).map(|b| (b + 1).to_string()).collect();
    format!("{{{}}}", cols.join(","))
}

fn amrd_check(args: &Parsed) -> CmdResult {
    let def = args.code_definition("file")?;
    let h = def.matrix()?;
    let report = amrd::single_error_condition(&h, subset_mode(args)?)?;
    let mut r = Report::new();
    r.push("holds", report.holds);
    r.push("pairs-checked", report.pairs_checked);
    match report.violating_pair {
        Some((p1, p2)) => {
            r.push("violating-pair", format!("{} {}", mask_to_set(p1), mask_to_set(p2)));
            let witness = amrd::witness_codeword(&h, (p1, p2))?;
            r.push("low-rank-codeword", word_to_string(&witness));
            r.push("low-rank-codeword-rank", rank_norm(&witness));
        }
        None => {
            r.push("violating-pair", "none");
        }
    }
    Ok(r.render(args.tsv()))
}

fn amrd_build(args: &Parsed) -> CmdResult {
    let def = args.code_definition("file")?;
    let h = def.matrix()?;
    let code = amrd::build_single_error_code(&h, subset_mode(args)?)?;
    code_report(&code, args.budget()?, args.tsv())
}

fn amrd_compare(args: &Parsed) -> CmdResult {
    let n = args.number("n")?;
    let k = args.number("k")?;
    let ext = args.number("N")?;
    let (rank_ball, hamming_ball) = amrd::rank_vs_hamming_counts(n, k, ext)?;
    let mut r = Report::new();
    r.push("radius", (n - k - 1) / 2);
    r.push("rank-metric-correctable", &rank_ball);
    r.push("hamming-metric-correctable", &hamming_ball);
    r.push("rank-dominates", rank_ball >= hamming_ball);
    Ok(r.render(args.tsv()))
}

fn extremal_a(args: &Parsed) -> CmdResult {
    let ctx = args.field()?;
    let n = args.number("n")?;
    let rank = args.number("r")?;
    let dist = args.number("d")?;
    if args.has("exact") && args.has("greedy") {
        return Err(usage("choose one of --exact, --greedy"));
    }
    let mode = if args.has("greedy") { SearchMode::Greedy } else { SearchMode::Exact };
    let set = a_search(ctx, n, rank, dist, mode, args.budget()?)?;
    let mut r = Report::new();
    r.push("mode", if matches!(mode, SearchMode::Exact) { "exact" } else { "greedy" });
    r.push("size", set.size());
    r.push("verified", set.verify()?);
    let mut out = r.render(args.tsv());
    if args.has("witness") {
        let mut table = Table::new(&["member", "coordinates"]);
        for (i, member) in set.members.iter().enumerate() {
            table.push(vec![i.to_string(), word_to_string(member)]);
        }
        if !args.tsv() {
            out.push('\n');
        }
        out.push_str(&table.render(args.tsv()));
    }
    Ok(out)
}

fn extremal_bound(args: &Parsed) -> CmdResult {
    let n = args.number("n")? as u64;
    let dist = args.number("d")? as u64;
    let ext = args.number("N")? as u64;
    let bound = rankcode_core::extremal::a_upper_bound(n, dist, ext)?;
    let mut r = Report::new();
    r.push("upper-bound", bound);
    Ok(r.render(args.tsv()))
}

fn extremal_min_k(args: &Parsed) -> CmdResult {
    let ctx = args.field()?;
    let n = args.number("n")?;
    let t = args.number("t")?;
    let m = args.number("m")? as u64;
    let min = exact_min_k(ctx, n, t, m, args.budget()?)?;
    let bound = sphere_bound_min_k(n as u64, t as u64, m, ctx.degree() as u64)?;
    let mut r = Report::new();
    r.push("exact-min-size", min.map_or("unachievable".to_string(), |k| k.to_string()));
    r.push("sphere-bound", render_bound(&bound));
    Ok(r.render(args.tsv()))
}

fn render_bound(bound: &SphereBound) -> String {
    match bound {
        SphereBound::Finite(b) => b.to_string(),
        SphereBound::Infinite => "inf".to_string(),
    }
}

fn covering_radius_cmd(args: &Parsed) -> CmdResult {
    let code = args.code_definition("code")?.code()?;
    let radius = covering_radius(&code, args.budget()?)?;
    let mut r = Report::new();
    r.push("covering-radius", radius);
    r.push("bound-n-minus-k", code.len() - code.dim());
    Ok(r.render(args.tsv()))
}

fn covering_multi(args: &Parsed) -> CmdResult {
    let code = args.code_definition("code")?.code()?;
    let m = args.number("m")? as u64;
    if args.has("exact") && args.has("samples") {
        return Err(usage("choose one of --exact, --samples"));
    }
    let mode = if args.has("samples") {
        let samples = args.number("samples")? as u64;
        let seed = args.number_or("seed", 0)? as u64;
        CoverMode::Sampled { samples, seed }
    } else {
        CoverMode::Exact
    };
    let report = multi_covering_radius(&code, m, mode, args.budget()?)?;
    let mut r = Report::new();
    r.push("multiplicity", report.multiplicity);
    r.push("code-size", report.code_size);
    r.push(if report.exact { "radius" } else { "radius-lower-bound" }, report.radius);
    r.push("exact", report.exact);
    Ok(r.render(args.tsv()))
}

fn covering_sphere_bound(args: &Parsed) -> CmdResult {
    let n = args.number("n")? as u64;
    let t = args.number("t")? as u64;
    let m = args.number("m")? as u64;
    let ext = args.number("N")? as u64;
    let bound = sphere_bound_min_k(n, t, m, ext)?;
    let mut r = Report::new();
    r.push("sphere-bound", render_bound(&bound));
    Ok(r.render(args.tsv()))
}

fn fuzzy_decode(args: &Parsed) -> CmdResult {
    let code = args.code_definition("code")?.code()?;
    let word = parse_word(code.context(), args.values("word")).map_err(CmdError::Usage)?;
    let model = args.model()?;
    let budget = args.budget()?;
    let decoded = fuzzy::theta_decode(&word, &code, model, budget)?;
    let mut r = Report::new();
    r.push("received", word_to_string(&word));
    r.push("maximizers", decoded.len());
    r.push("uniquely-decodable", decoded.len() == 1);
    let mut out = r.render(args.tsv());
    let mut table = Table::new(&["codeword", "membership", "rank-distance"]);
    for c in &decoded {
        let score = fuzzy::membership(c, &word, model)?;
        table.push(vec![
            word_to_string(c),
            format!("{score:.12e}"),
            rank_distance(c, &word)?.to_string(),
        ]);
    }
    if !args.tsv() {
        out.push('\n');
    }
    out.push_str(&table.render(args.tsv()));
    Ok(out)
}

fn fuzzy_mindist(args: &Parsed) -> CmdResult {
    let code = args.code_definition("code")?.code()?;
    let model = args.model()?;
    let value = fuzzy::fuzzy_min_distance(&code, model, args.budget()?)?;
    let mut r = Report::new();
    r.push("fuzzy-min-distance", format!("{value:.12e}"));
    Ok(r.render(args.tsv()))
}

fn load_ensemble(args: &Parsed) -> Result<rankcode_core::mcode::Ensemble, CmdError> {
    let text = args.read_file("file")?;
    let blocks = parse_ensemble_file(&text).map_err(|e| usage(e.to_string()))?;
    Ok(ensemble_from_blocks(&blocks)?)
}

fn mcode_classify(args: &Parsed) -> CmdResult {
    let ensemble = load_ensemble(args)?;
    let labels = ensemble.classify(args.budget()?)?;
    let mut r = Report::new();
    r.push("components", ensemble.len());
    let rendered: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    r.push("labels", rendered.join(" "));
    Ok(r.render(args.tsv()))
}

fn mcode_analyze(args: &Parsed) -> CmdResult {
    let ensemble = load_ensemble(args)?;
    let budget = args.budget()?;
    let multiplicities: Vec<u64> = if args.has("m") {
        let values = args.values("m");
        if values.len() != ensemble.len() {
            return Err(usage(format!("--m needs {} values", ensemble.len())));
        }
        values
            .iter()
            .map(|v| {
                v.parse().map_err(|_| usage(format!("--m values must be numbers, found '{v}'")))
            })
            .collect::<Result<_, _>>()?
    } else {
        vec![1; ensemble.len()]
    };
    let mut table = Table::new(&[
        "component",
        "kind",
        "length",
        "dim",
        "min-distance",
        "divisor",
        "mrd",
        "amrd",
        "cyclic",
        "covering-radius",
        "multiplicity",
    ]);
    let covers = ensemble.covering_tuple(&multiplicities, CoverMode::Exact, budget)?;
    for (i, comp) in ensemble.components().iter().enumerate() {
        let profile = comp.profile(budget)?;
        table.push(vec![
            i.to_string(),
            if profile.is_linear { "linear".into() } else { "circulant".into() },
            profile.len.to_string(),
            profile.dim.to_string(),
            profile.min_distance.to_string(),
            profile.divisor.to_string(),
            profile.is_mrd.to_string(),
            profile.is_amrd.to_string(),
            profile.is_cyclic.to_string(),
            covers[i].radius.to_string(),
            multiplicities[i].to_string(),
        ]);
    }
    let labels = ensemble.classify(budget)?;
    let mut out = table.render(args.tsv());
    let mut summary = Report::new();
    let rendered: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    summary.push("labels", rendered.join(" "));
    if !args.tsv() {
        out.push('\n');
    }
    out.push_str(&summary.render(args.tsv()));
    Ok(out)
}

fn verify_cmd(args: &Parsed) -> Outcome {
    let suite = match args.require("suite") {
        Ok(text) => match Suite::parse(text) {
            Some(suite) => suite,
            None => {
                return Outcome {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!(
                        "error: unknown suite '{text}' (available: {})\n",
                        Suite::names()
                    ),
                }
            }
        },
        Err(CmdError::Usage(msg)) => {
            return Outcome {
                exit_code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: {msg}\n"),
            }
        }
        Err(CmdError::Budget(_)) => unreachable!("require never raises budget errors"),
    };
    let checks = suite.checks();
    let mut table = Table::new(&["result", "check", "expected", "observed"]);
    let mut all_pass = true;
    for check in &checks {
        all_pass &= check.pass;
        table.push(vec![
            if check.pass { "PASS".into() } else { "FAIL".into() },
            check.name.clone(),
            check.expected.clone(),
            check.observed.clone(),
        ]);
    }
    let mut out = table.render(args.tsv());
    if !args.tsv() {
        out.push_str(&format!(
            "\n{} of {} checks passed\n",
            checks.iter().filter(|c| c.pass).count(),
            checks.len()
        ));
    }
    Outcome {
        exit_code: if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED },
        stdout: out,
        stderr: String::new(),
    }
}
