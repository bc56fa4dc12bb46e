//! Text, JSON and CSV renderings of engine results.

use l1class::classnum::ClassNumberReport;
use l1class::strategy::SuiteOutcome;
use l1class::ComplexScalar;
use serde_json::{json, Map, Value};

pub const CSV_HEADER: &str = "D,h,h_real,residual,regulator";

/// `x` rounded to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Shortest decimal that reproduces `round12(x)`.
pub fn fmt12(x: f64) -> String {
    let r = round12(x);
    if r != 0.0 && r.is_finite() && !(1e-4..1e15).contains(&r.abs()) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

pub fn fmt_complex(z: ComplexScalar) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {sign} {}i", fmt12(z.re), fmt12(z.im.abs()))
}

fn num(x: f64) -> Value {
    json!(round12(x))
}

fn pair(z: ComplexScalar) -> Value {
    json!([round12(z.re), round12(z.im)])
}

pub fn complex_json(z: ComplexScalar) -> Value {
    pair(z)
}

pub fn real_json(x: f64) -> Value {
    num(x)
}

pub fn report_json(r: &ClassNumberReport) -> Value {
    let mut obj = Map::new();
    obj.insert("discriminant".into(), json!(r.disc));
    obj.insert(
        "terms".into(),
        json!({
            "A": pair(r.term_a),
            "B": pair(r.term_b),
            "C": pair(r.term_c),
            "S": pair(r.term_s),
        }),
    );
    obj.insert("L1".into(), pair(r.l1));
    obj.insert("regulator".into(), num(r.regulator));
    obj.insert("h_real".into(), num(r.h_real));
    obj.insert("h".into(), json!(r.h));
    obj.insert("residual".into(), num(r.residual));
    obj.insert("imag_leak".into(), num(r.imag_leak));
    obj.insert("status".into(), json!(r.status.as_str()));
    if let Some(h) = r.oracle_h {
        obj.insert("oracle_h".into(), json!(h));
    }
    if let Some(reason) = &r.failure {
        obj.insert("failure".into(), json!(reason));
    }
    Value::Object(obj)
}

pub fn report_text(r: &ClassNumberReport, verbose: bool) -> String {
    let mut s = String::new();
    if verbose {
        s += &format!("D = {}\n", r.disc);
        s += &format!("A = {}\n", fmt_complex(r.term_a));
        s += &format!("B = {}\n", fmt_complex(r.term_b));
        s += &format!("C = {}\n", fmt_complex(r.term_c));
        s += &format!("S = {}\n", fmt_complex(r.term_s));
        s += &format!("L(1, chi_D) = {}\n", fmt_complex(r.l1));
        s += &format!("log epsilon_D = {}\n", fmt12(r.regulator));
        s += &format!("h({}) = {}\n", r.disc, fmt_complex(r.term_sum() / r.regulator));
        s += &format!("residual = {}\n", fmt12(r.residual));
        s += &format!("imag_leak = {}\n", fmt12(r.imag_leak));
        s += &format!("status = {}\n", r.status.as_str());
    }
    s += &format!("h = {}\n", r.h);
    if let Some(reason) = &r.failure {
        s += &format!("failure: {reason}\n");
    }
    s
}

pub fn csv_row(r: &ClassNumberReport) -> String {
    format!("{},{},{},{},{}", r.disc, r.h, fmt12(r.h_real), fmt12(r.residual), fmt12(r.regulator))
}

pub fn range_text(reports: &[ClassNumberReport]) -> String {
    let mut s = format!("{:>6} {:>4} {:>18} {:>10} {}\n", "D", "h", "h_real", "residual", "status");
    for r in reports {
        s += &format!(
            "{:>6} {:>4} {:>18} {:>10} {}\n",
            r.disc,
            r.h,
            fmt12(r.h_real),
            format!("{:.2e}", r.residual),
            r.status.as_str()
        );
    }
    s
}

pub fn suite_json(o: &SuiteOutcome) -> Value {
    json!({
        "suite": o.suite,
        "max_modulus": o.max_modulus,
        "cases": o.cases,
        "max_residual": num(o.max_residual),
        "passed": o.passed(),
        "failures": o.failures,
    })
}

pub fn suite_text(o: &SuiteOutcome, verbose: bool) -> String {
    let mut s = format!(
        "{:<8} m <= {:<4} cases = {:<6} max residual = {:.3e}  {}\n",
        o.suite,
        o.max_modulus,
        o.cases,
        o.max_residual,
        if o.passed() { "PASS" } else { "FAIL" }
    );
    let shown = if verbose { o.failures.len() } else { o.failures.len().min(5) };
    for f in &o.failures[..shown] {
        s += &format!("    {f}\n");
    }
    if shown < o.failures.len() {
        s += &format!("    ... {} more\n", o.failures.len() - shown);
    }
    s
}

pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}
