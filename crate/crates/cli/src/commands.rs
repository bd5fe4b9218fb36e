use std::fs;

use serde::Serialize;
use serde_json::{json, Value};
use threeiet::arith::{in_integer_span, QuadraticNumber};
use threeiet::iet::{first_return, idoc, IetParameters, Rotation, ThreeIet};
use threeiet::subst::Morphism;
use threeiet::theorems::{
    facts_check, is_sturm, recover_parameters, search, theorem_a_certificate, theorem_b_audit,
    CertificateOptions, Overall, SearchBounds,
};
use threeiet::words::{balance, complexity, Alphabet, Word};

use crate::svg;
use crate::{Check, Cli, Command, ParamArgs, WordArgs};

/// Exit status for an audit that reports a violated necessary condition.
const EXIT_VIOLATION: u8 = 2;

struct Outcome {
    text: String,
    json: Value,
    status: u8,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            status: 0,
        }
    }
}

type Result<T> = std::result::Result<T, String>;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn parse_params(p: &ParamArgs) -> Result<IetParameters> {
    IetParameters::parse(&p.epsilon, &p.l, &p.c).map_err(err)
}

fn read_text(input: &WordArgs) -> Result<String> {
    let text = match (&input.word, &input.file) {
        (Some(w), None) => w.clone(),
        (None, Some(path)) => {
            fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
        }
        _ => return Err("supply a word or --file".into()),
    };
    let text = text.strip_suffix('\n').unwrap_or(&text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    Ok(text.to_string())
}

fn read_word(input: &WordArgs) -> Result<Word> {
    Word::infer(&read_text(input)?).map_err(err)
}

fn number(x: &QuadraticNumber) -> Value {
    to_value(x)
}

fn gen3iet(p: &ParamArgs, n: usize) -> Result<Outcome> {
    let params = parse_params(p)?;
    let orbit = ThreeIet::new(params.clone()).orbit(n).map_err(err)?;
    let points: Vec<Value> = orbit.points[..n].iter().map(number).collect();
    let word = orbit.word.to_string();
    let json = json!({ "command": "gen3iet", "parameters": params, "n": n, "word": word, "points": points });
    Ok(Outcome::ok(word, json))
}

fn gensturm(p: &ParamArgs, n: usize, prime: bool) -> Result<Outcome> {
    let params = parse_params(p)?;
    let rotation = if prime {
        Rotation::r_prime(&params)
    } else {
        Rotation::r(&params)
    };
    let word = rotation.code(n).map_err(err)?.to_string();
    let json = json!({
        "command": "gensturm",
        "parameters": params,
        "rotation": if prime { "R'" } else { "R" },
        "n": n,
        "word": word,
    });
    Ok(Outcome::ok(word, json))
}

fn induce(p: &ParamArgs, cap: usize) -> Result<Outcome> {
    let params = parse_params(p)?;
    let t = ThreeIet::new(params.clone());
    let (lo, hi) = t.domain();
    let induced = first_return(&Rotation::r(&params), lo, hi, cap).map_err(err)?;
    let equals = induced.same_exchange_as(&t);
    let mut text = String::new();
    for piece in &induced.pieces {
        text.push_str(&format!(
            "[{}, {}) return time {} translation {}\n",
            piece.lo, piece.hi, piece.return_time, piece.translation
        ));
    }
    text.push_str(&format!("equals the exchange: {equals}"));
    let pieces: Vec<Value> = induced
        .pieces
        .iter()
        .map(|piece| {
            json!({
                "lo": number(&piece.lo),
                "hi": number(&piece.hi),
                "returnTime": piece.return_time,
                "translation": number(&piece.translation),
            })
        })
        .collect();
    let json = json!({ "command": "induce", "parameters": params, "pieces": pieces, "equalsExchange": equals });
    Ok(Outcome::ok(text, json))
}

fn analyze(
    input: &WordArgs,
    checks: &[Check],
    n_max: Option<usize>,
    min_length: usize,
) -> Result<Outcome> {
    let w = read_word(input)?;
    let mut json =
        json!({ "command": "analyze", "length": w.len(), "alphabet": w.alphabet().to_string() });
    let mut text = format!("length {} over {}\n", w.len(), w.alphabet());
    if checks.contains(&Check::Complexity) {
        let n = n_max.unwrap_or(30).min(w.len());
        let profile = complexity(&w, n).map_err(err)?;
        text.push_str(&format!(
            "complexity (reliable up to n = {}):",
            profile.reliable_up_to
        ));
        for (n, c) in profile
            .counts
            .iter()
            .enumerate()
            .skip(1)
            .take(profile.reliable_up_to)
        {
            text.push_str(&format!(" C({n})={c}"));
        }
        text.push('\n');
        json["complexity"] = to_value(&profile);
    }
    if checks.contains(&Check::Balance) {
        let n = n_max.unwrap_or(300).min(w.len());
        let report = balance(&w, n).map_err(err)?;
        text.push_str(&format!(
            "balance up to n = {}: max imbalance {}",
            n, report.max_imbalance
        ));
        if let Some(witness) = &report.witness {
            let (a, b) = witness.factors(&w);
            text.push_str(&format!(" (letter {} in {a} vs {b})", witness.letter));
        }
        text.push('\n');
        json["balance"] = to_value(&report);
    }
    if checks.contains(&Check::Certificate) {
        let options = CertificateOptions {
            min_length,
            max_factor_length: None,
        };
        let certificate = theorem_a_certificate(&w, options).map_err(err)?;
        text.push_str(&format!("certificate: {}\n", certificate.verdict.name()));
        json["certificate"] = to_value(&certificate);
    }
    Ok(Outcome::ok(text.trim_end().to_string(), json))
}

fn idoc_command(p: &ParamArgs) -> Result<Outcome> {
    let params = parse_params(p)?;
    let holds = idoc(&params);
    let rational = params.epsilon().is_rational();
    let span = in_integer_span(params.l(), params.epsilon()).map_err(err)?;
    let json = json!({
        "command": "idoc",
        "parameters": params,
        "idoc": holds,
        "epsilonRational": rational,
        "lInIntegerSpan": span,
    });
    Ok(Outcome::ok(format!("idoc: {holds}"), json))
}

fn sturm(value: &str) -> Result<Outcome> {
    let x: QuadraticNumber = value.parse().map_err(err)?;
    let verdict = is_sturm(&x);
    let json = json!({
        "command": "sturm",
        "value": number(&x),
        "conjugate": number(&x.conjugate()),
        "verdict": verdict,
    });
    Ok(Outcome::ok(format!("sturm: {}", verdict.is_sturm), json))
}

fn recover(input: &WordArgs, epsilon: Option<&str>) -> Result<Outcome> {
    let w = read_word(input)?;
    let epsilon = epsilon
        .map(str::parse::<QuadraticNumber>)
        .transpose()
        .map_err(err)?;
    let r = recover_parameters(&w, epsilon.as_ref()).map_err(err)?;
    let text = format!(
        "c = {}\nl = {}\nregenerated {}/{} letters ({:?})",
        r.c_hat,
        r.l_hat,
        r.regeneration.matched_letters,
        r.regeneration.length,
        r.regeneration.convention
    );
    let mut json = to_value(&r);
    json["command"] = json!("recover");
    Ok(Outcome::ok(text, json))
}

fn audit(text: &str, prefix_len: usize, facts_depth: Option<usize>) -> Result<Outcome> {
    let m: Morphism = text.parse().map_err(err)?;
    let report = theorem_b_audit(&m, prefix_len).map_err(err)?;
    let mut json = to_value(&report);
    json["command"] = json!("audit");
    let mut lines = vec![format!("morphism {}", report.morphism)];
    if let Some(e) = &report.epsilon {
        lines.push(format!("epsilon = {e}"));
    }
    if let Some(v) = &report.sturm_verdict {
        lines.push(format!("sturm: {}", v.is_sturm));
    }
    if let (Some(depth), Some(exact)) = (facts_depth, &report.exact_parameters) {
        let facts = facts_check(&m, &exact.params, depth).map_err(err)?;
        lines.push(format!("facts hold: {}", facts.all_hold()));
        json["facts"] = to_value(&facts);
    }
    let status = match &report.overall {
        Overall::Pass => {
            lines.push(format!("overall: pass ({})", report.note));
            0
        }
        Overall::NotApplicable(reason) => {
            lines.push(format!("overall: not applicable ({reason})"));
            0
        }
        Overall::Fail(reason) => {
            lines.push(format!("overall: FAIL ({reason})"));
            EXIT_VIOLATION
        }
    };
    Ok(Outcome {
        text: lines.join("\n"),
        json,
        status,
    })
}

fn search_command(
    prefix_len: usize,
    max_image_length: usize,
    max_total_length: usize,
) -> Result<Outcome> {
    let bounds = SearchBounds {
        max_image_length,
        max_total_length,
        prefix_length: prefix_len,
    };
    let report = search(bounds).map_err(err)?;
    let mut text = format!(
        "enumerated {}, primitive with a fixed point {}, certificate passes {}\n",
        report.enumerated,
        report.primitive_with_fixed_point,
        report.candidates.len()
    );
    let mut status = 0;
    for audit in &report.candidates {
        let verdict = match &audit.overall {
            Overall::Pass => "pass".to_string(),
            Overall::NotApplicable(reason) => format!("not applicable: {reason}"),
            Overall::Fail(reason) => {
                status = EXIT_VIOLATION;
                format!("FAIL: {reason}")
            }
        };
        let eps = audit
            .epsilon
            .as_ref()
            .map(ToString::to_string)
            .unwrap_or_default();
        text.push_str(&format!("{} epsilon={} {}\n", audit.morphism, eps, verdict));
    }
    let mut json = to_value(&report);
    json["command"] = json!("search");
    Ok(Outcome {
        text: text.trim_end().to_string(),
        json,
        status,
    })
}

fn svg_command(input: &WordArgs, width: f64, to_file: bool) -> Result<(Outcome, Option<String>)> {
    let text = read_text(input)?;
    let w = if text.is_empty() {
        Word::empty(Alphabet::ternary())
    } else {
        Word::infer(&text).map_err(err)?
    };
    let drawing = svg::render(&w, width)?;
    let mut json = to_value(&drawing);
    json["command"] = json!("svg");
    if to_file {
        let text = format!(
            "{} segments, corridor width {:.3} px (unit diagonal {:.3} px)",
            drawing.segments, drawing.corridor_width, drawing.unit_diagonal
        );
        Ok((Outcome::ok(text, json), Some(drawing.svg)))
    } else {
        json["svg"] = json!(drawing.svg);
        Ok((Outcome::ok(drawing.svg.trim_end().to_string(), json), None))
    }
}

fn dispatch(cli: &Cli) -> Result<(Outcome, Option<String>)> {
    let plain = |o: Result<Outcome>| o.map(|o| (o, None));
    match &cli.command {
        Command::Gen3iet { params, n } => plain(gen3iet(params, *n)),
        Command::Gensturm { params, n, prime } => plain(gensturm(params, *n, *prime)),
        Command::Induce { params, cap } => plain(induce(params, *cap)),
        Command::Analyze {
            input,
            checks,
            n_max,
            min_length,
        } => plain(analyze(input, checks, *n_max, *min_length)),
        Command::Idoc { params } => plain(idoc_command(params)),
        Command::Sturm { value } => plain(sturm(value)),
        Command::Recover { input, epsilon } => plain(recover(input, epsilon.as_deref())),
        Command::Audit {
            morphism,
            facts_depth,
        } => plain(audit(morphism, cli.seed_prefix_len, *facts_depth)),
        Command::Search {
            max_image_length,
            max_total_length,
        } => plain(search_command(
            cli.seed_prefix_len,
            *max_image_length,
            *max_total_length,
        )),
        Command::Svg { input, width } => svg_command(input, *width, cli.out.is_some()),
    }
}

/// Runs the command and returns the process exit status.
pub fn run(cli: &Cli) -> u8 {
    let (outcome, file_payload) = match dispatch(cli) {
        Ok(result) => result,
        Err(message) => {
            if cli.json {
                println!("{}", json!({ "error": message }));
            } else {
                eprintln!("error: {message}");
            }
            return 1;
        }
    };
    let rendered = if cli.json {
        serde_json::to_string_pretty(&outcome.json).expect("serializable") + "\n"
    } else if outcome.text.is_empty() {
        String::new()
    } else {
        outcome.text + "\n"
    };
    match (&cli.out, file_payload) {
        (Some(path), Some(payload)) => {
            if let Err(e) = fs::write(path, payload) {
                return report_write_error(cli, path, e);
            }
            print!("{rendered}");
        }
        (Some(path), None) => {
            if let Err(e) = fs::write(path, rendered) {
                return report_write_error(cli, path, e);
            }
        }
        (None, _) => print!("{rendered}"),
    }
    outcome.status
}

fn report_write_error(cli: &Cli, path: &std::path::Path, e: std::io::Error) -> u8 {
    let message = format!("cannot write {}: {e}", path.display());
    if cli.json {
        println!("{}", json!({ "error": message }));
    } else {
        eprintln!("error: {message}");
    }
    1
}
