//! The line-oriented `key = value` input format and its canonical writers.
//!
//! One construct per file; `#` starts a comment; lists use square brackets
//! and may nest; `inf` denotes the infinite cyclic target. Which construct a
//! file holds is decided by its keys:
//!
//! - `family = holder(n=4, m=2, i=2, j=3)` (also `fin_by_inf(n, t)`,
//!   `inf_by_fin_abelian(n, t)`, `inf_by_fin_flip(n)`, `zxz`,
//!   `klein_bottle`, `twisted(n=.., m=.., phi=[..])` with `n = inf` for the
//!   infinite-target twist);
//! - `m`, `n`, `phi` for a cocycle profile;
//! - `group = cyclic(6)` or `table = [[..], ..]` with optional `labels` for
//!   a finite group table;
//! - `h`, `g` (each `cyclic(N)` or an explicit table), `alpha`, `f`, and
//!   optional `h_labels` / `g_labels` for a crossed system.
//!
//! Writers emit exactly this format, and printing then re-parsing any
//! construct yields an equal value.

use crossed_forge_core::{
    CocycleMap, CocycleProfile, CocycleTarget, CrossedSystem, FiniteGroupTable, GroupFamily,
    WeakActionMap,
};
use std::fmt::Write as _;

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Inf,
    Ident(String),
    Str(String),
    List(Vec<Value>),
    Call {
        name: String,
        args: Vec<(String, Value)>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Construct {
    Family(GroupFamily),
    Profile(CocycleProfile),
    System(CrossedSystem),
    Group(FiniteGroupTable),
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Scanner {
    fn error(&self, message: impl Into<String>) -> CliError {
        CliError::Parse {
            line: self.line,
            col: self.pos + 1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<(), CliError> {
        self.skip_spaces();
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of line"))),
        }
    }

    fn ident(&mut self) -> Result<String, CliError> {
        self.skip_spaces();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an identifier"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn value(&mut self) -> Result<Value, CliError> {
        self.skip_spaces();
        match self.peek() {
            Some('[') => {
                self.bump();
                let mut items = Vec::new();
                self.skip_spaces();
                if self.peek() == Some(']') {
                    self.bump();
                    return Ok(Value::List(items));
                }
                loop {
                    items.push(self.value()?);
                    self.skip_spaces();
                    match self.bump() {
                        Some(',') => continue,
                        Some(']') => break,
                        Some(c) => {
                            return Err(self.error(format!("expected `,` or `]`, found `{c}`")))
                        }
                        None => return Err(self.error("unterminated list")),
                    }
                }
                Ok(Value::List(items))
            }
            Some('"') => {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        Some('"') => break,
                        Some('\\') => match self.bump() {
                            Some(c @ ('"' | '\\')) => s.push(c),
                            _ => return Err(self.error("bad escape in string")),
                        },
                        Some(c) => s.push(c),
                        None => return Err(self.error("unterminated string")),
                    }
                }
                Ok(Value::Str(s))
            }
            Some(c) if c == '-' || c.is_ascii_digit() => {
                let start = self.pos;
                if c == '-' {
                    self.pos += 1;
                }
                while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                text.parse::<i64>()
                    .map(Value::Int)
                    .map_err(|_| self.error(format!("bad integer `{text}`")))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let name = self.ident()?;
                self.skip_spaces();
                if self.peek() == Some('(') {
                    self.bump();
                    let mut args = Vec::new();
                    self.skip_spaces();
                    if self.peek() == Some(')') {
                        self.bump();
                        return Ok(Value::Call { name, args });
                    }
                    loop {
                        // `ident = value`, or a bare positional value
                        self.skip_spaces();
                        let checkpoint = self.pos;
                        let key = if matches!(self.peek(), Some(c) if c.is_alphabetic() || c == '_')
                        {
                            let ident = self.ident()?;
                            self.skip_spaces();
                            if self.peek() == Some('=') {
                                self.bump();
                                Some(ident)
                            } else {
                                self.pos = checkpoint;
                                None
                            }
                        } else {
                            None
                        };
                        let value = self.value()?;
                        args.push((key.unwrap_or_default(), value));
                        self.skip_spaces();
                        match self.bump() {
                            Some(',') => continue,
                            Some(')') => break,
                            Some(c) => {
                                return Err(
                                    self.error(format!("expected `,` or `)`, found `{c}`"))
                                )
                            }
                            None => return Err(self.error("unterminated call")),
                        }
                    }
                    Ok(Value::Call { name, args })
                } else if name == "inf" {
                    Ok(Value::Inf)
                } else {
                    Ok(Value::Ident(name))
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("expected a value")),
        }
    }
}

/// Parses the raw `key = value` lines, preserving order.
pub fn parse_lines(text: &str) -> Result<Vec<(String, Value, usize)>, CliError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if stripped.trim().is_empty() {
            continue;
        }
        let mut scanner = Scanner {
            chars: stripped.chars().collect(),
            pos: 0,
            line: line_no,
        };
        let key = scanner.ident()?;
        scanner.expect('=')?;
        let value = scanner.value()?;
        scanner.skip_spaces();
        if let Some(c) = scanner.peek() {
            return Err(scanner.error(format!("trailing `{c}` after value")));
        }
        out.push((key, value, line_no));
    }
    Ok(out)
}

fn semantic(line: usize, message: impl Into<String>) -> CliError {
    CliError::Semantic {
        message: format!("line {line}: {}", message.into()),
    }
}

fn as_u64(v: &Value, line: usize, what: &str) -> Result<u64, CliError> {
    match v {
        Value::Int(i) if *i >= 0 => Ok(*i as u64),
        _ => Err(semantic(line, format!("{what} must be a non-negative integer"))),
    }
}

fn as_i64(v: &Value, line: usize, what: &str) -> Result<i64, CliError> {
    match v {
        Value::Int(i) => Ok(*i),
        _ => Err(semantic(line, format!("{what} must be an integer"))),
    }
}

fn as_int_list(v: &Value, line: usize, what: &str) -> Result<Vec<i64>, CliError> {
    match v {
        Value::List(items) => items
            .iter()
            .map(|item| as_i64(item, line, what))
            .collect(),
        _ => Err(semantic(line, format!("{what} must be a list of integers"))),
    }
}

fn as_index_rows(v: &Value, line: usize, what: &str) -> Result<Vec<Vec<usize>>, CliError> {
    let rows = match v {
        Value::List(rows) => rows,
        _ => return Err(semantic(line, format!("{what} must be a list of rows"))),
    };
    rows.iter()
        .map(|row| {
            as_int_list(row, line, what)?
                .into_iter()
                .map(|i| {
                    usize::try_from(i)
                        .map_err(|_| semantic(line, format!("{what} entries must be >= 0")))
                })
                .collect()
        })
        .collect()
}

fn as_label_list(v: &Value, line: usize) -> Result<Vec<String>, CliError> {
    match v {
        Value::List(items) => items
            .iter()
            .map(|item| match item {
                Value::Str(s) => Ok(s.clone()),
                Value::Ident(s) => Ok(s.clone()),
                Value::Int(i) => Ok(i.to_string()),
                _ => Err(semantic(line, "labels must be strings")),
            })
            .collect(),
        _ => Err(semantic(line, "labels must be a list")),
    }
}

fn call_args<'v>(
    v: &'v Value,
    line: usize,
    expected: &[&str],
) -> Result<Vec<(&'v str, &'v Value)>, CliError> {
    match v {
        Value::Call { args, .. } => {
            let got: Vec<(&str, &Value)> =
                args.iter().map(|(k, v)| (k.as_str(), v)).collect();
            for (k, _) in &got {
                if !expected.contains(k) {
                    return Err(semantic(line, format!("unknown argument `{k}`")));
                }
            }
            for want in expected {
                if !got.iter().any(|(k, _)| k == want) {
                    return Err(semantic(line, format!("missing argument `{want}`")));
                }
            }
            Ok(got)
        }
        _ => unreachable!("checked by caller"),
    }
}

fn arg<'v>(args: &[(&str, &'v Value)], name: &str) -> &'v Value {
    args.iter().find(|(k, _)| *k == name).expect("checked").1
}

fn family_from_value(v: &Value, line: usize) -> Result<GroupFamily, CliError> {
    match v {
        Value::Ident(name) => match name.as_str() {
            "zxz" => Ok(GroupFamily::ZxZ),
            "klein_bottle" => Ok(GroupFamily::KleinBottle),
            other => Err(semantic(line, format!("unknown family `{other}`"))),
        },
        Value::Call { name, .. } => match name.as_str() {
            "holder" => {
                let args = call_args(v, line, &["n", "m", "i", "j"])?;
                Ok(GroupFamily::Holder {
                    n: as_u64(arg(&args, "n"), line, "n")?,
                    m: as_u64(arg(&args, "m"), line, "m")?,
                    i: as_u64(arg(&args, "i"), line, "i")?,
                    j: as_u64(arg(&args, "j"), line, "j")?,
                })
            }
            "fin_by_inf" => {
                let args = call_args(v, line, &["n", "t"])?;
                Ok(GroupFamily::FinByInf {
                    n: as_u64(arg(&args, "n"), line, "n")?,
                    t: as_i64(arg(&args, "t"), line, "t")?,
                })
            }
            "inf_by_fin_abelian" => {
                let args = call_args(v, line, &["n", "t"])?;
                Ok(GroupFamily::InfByFinAbelian {
                    n: as_u64(arg(&args, "n"), line, "n")?,
                    t: as_i64(arg(&args, "t"), line, "t")?,
                })
            }
            "inf_by_fin_flip" => {
                let args = call_args(v, line, &["n"])?;
                Ok(GroupFamily::InfByFinFlip {
                    n: as_u64(arg(&args, "n"), line, "n")?,
                })
            }
            "twisted" => {
                let args = call_args(v, line, &["n", "m", "phi"])?;
                let m = as_u64(arg(&args, "m"), line, "m")?;
                let phi = as_int_list(arg(&args, "phi"), line, "phi")?;
                let profile = match arg(&args, "n") {
                    Value::Inf => CocycleProfile::new(m, CocycleTarget::InfiniteCyclic, phi),
                    other => {
                        let n = as_u64(other, line, "n")?;
                        CocycleProfile::new(m, CocycleTarget::Finite(n), phi)
                    }
                }
                .map_err(|e| semantic(line, e.to_string()))?;
                let fam = if profile.target().is_finite() {
                    GroupFamily::twisted_finite(profile)
                } else {
                    GroupFamily::twisted_infinite(profile)
                };
                fam.map_err(|e| semantic(line, e.to_string()))
            }
            other => Err(semantic(line, format!("unknown family `{other}`"))),
        },
        _ => Err(semantic(line, "family must be a name or a call")),
    }
}

fn table_from_value(v: &Value, line: usize, what: &str) -> Result<FiniteGroupTable, CliError> {
    match v {
        Value::Call { name, args } if name == "cyclic" => {
            if args.len() != 1 || !(args[0].0.is_empty() || args[0].0 == "n") {
                return Err(semantic(line, "cyclic takes a single order, e.g. cyclic(6)"));
            }
            let n = as_u64(&args[0].1, line, "cyclic order")?;
            if n == 0 {
                return Err(semantic(line, "cyclic order must be positive"));
            }
            Ok(FiniteGroupTable::cyclic(n as usize))
        }
        Value::List(_) => {
            let rows = as_index_rows(v, line, what)?;
            FiniteGroupTable::from_rows(rows, None).map_err(|e| semantic(line, e.to_string()))
        }
        _ => Err(semantic(
            line,
            format!("{what} must be `cyclic(N)` or an explicit table"),
        )),
    }
}

/// Interprets a complete file as one construct.
pub fn parse_spec(text: &str) -> Result<Construct, CliError> {
    let lines = parse_lines(text)?;
    if lines.is_empty() {
        return Err(CliError::Semantic {
            message: "empty specification".to_owned(),
        });
    }
    let mut seen = std::collections::BTreeMap::new();
    for (key, value, line) in &lines {
        if seen.insert(key.clone(), (value, *line)).is_some() {
            return Err(semantic(*line, format!("duplicate key `{key}`")));
        }
    }
    let get = |key: &str| seen.get(key).copied();
    let has = |key: &str| seen.contains_key(key);

    let known: &[&str] = &[
        "family", "m", "n", "phi", "group", "table", "labels", "h", "g", "alpha", "f",
        "h_labels", "g_labels",
    ];
    for (key, (_, line)) in &seen {
        if !known.contains(&key.as_str()) {
            return Err(semantic(*line, format!("unknown key `{key}`")));
        }
    }

    if let Some((value, line)) = get("family") {
        return Ok(Construct::Family(family_from_value(value, line)?));
    }
    if has("phi") {
        let (phi_v, phi_line) = get("phi").expect("checked");
        let (m_v, m_line) = get("m")
            .ok_or_else(|| semantic(phi_line, "profile requires `m`"))?;
        let (n_v, n_line) = get("n")
            .ok_or_else(|| semantic(phi_line, "profile requires `n` (or `n = inf`)"))?;
        let m = as_u64(m_v, m_line, "m")?;
        let phi = as_int_list(phi_v, phi_line, "phi")?;
        let target = match n_v {
            Value::Inf => CocycleTarget::InfiniteCyclic,
            other => CocycleTarget::Finite(as_u64(other, n_line, "n")?),
        };
        let profile =
            CocycleProfile::new(m, target, phi).map_err(|e| semantic(phi_line, e.to_string()))?;
        return Ok(Construct::Profile(profile));
    }
    if has("h") || has("g") || has("alpha") || has("f") {
        let (h_v, h_line) =
            get("h").ok_or_else(|| semantic(1, "crossed system requires `h`"))?;
        let (g_v, g_line) =
            get("g").ok_or_else(|| semantic(1, "crossed system requires `g`"))?;
        let (a_v, a_line) =
            get("alpha").ok_or_else(|| semantic(1, "crossed system requires `alpha`"))?;
        let (f_v, f_line) =
            get("f").ok_or_else(|| semantic(1, "crossed system requires `f`"))?;
        let mut h = table_from_value(h_v, h_line, "h")?;
        let mut g = table_from_value(g_v, g_line, "g")?;
        if let Some((lv, ll)) = get("h_labels") {
            h = h
                .with_labels(as_label_list(lv, ll)?)
                .map_err(|e| semantic(ll, e.to_string()))?;
        }
        if let Some((lv, ll)) = get("g_labels") {
            g = g
                .with_labels(as_label_list(lv, ll)?)
                .map_err(|e| semantic(ll, e.to_string()))?;
        }
        let alpha = WeakActionMap::new(as_index_rows(a_v, a_line, "alpha")?);
        let f = CocycleMap::from_rows(as_index_rows(f_v, f_line, "f")?)
            .map_err(|e| semantic(f_line, e.to_string()))?;
        let sys = CrossedSystem::new(h, g, alpha, f)
            .map_err(|e| semantic(f_line, e.to_string()))?;
        return Ok(Construct::System(sys));
    }
    if has("group") || has("table") {
        let mut table = match (get("group"), get("table")) {
            (Some((v, line)), None) => table_from_value(v, line, "group")?,
            (None, Some((v, line))) => table_from_value(v, line, "table")?,
            (Some((_, line)), Some(_)) => {
                return Err(semantic(line, "give either `group` or `table`, not both"))
            }
            (None, None) => unreachable!(),
        };
        if let Some((lv, ll)) = get("labels") {
            table = table
                .with_labels(as_label_list(lv, ll)?)
                .map_err(|e| semantic(ll, e.to_string()))?;
        }
        return Ok(Construct::Group(table));
    }
    Err(CliError::Semantic {
        message: "file does not describe a family, profile, group, or crossed system".to_owned(),
    })
}

fn write_int_list(out: &mut String, values: impl IntoIterator<Item = i64>) {
    out.push('[');
    for (idx, v) in values.into_iter().enumerate() {
        if idx > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{v}");
    }
    out.push(']');
}

fn write_rows(out: &mut String, rows: &[Vec<usize>]) {
    out.push('[');
    for (idx, row) in rows.iter().enumerate() {
        if idx > 0 {
            out.push_str(", ");
        }
        write_int_list(out, row.iter().map(|&v| v as i64));
    }
    out.push(']');
}

fn write_labels(out: &mut String, key: &str, labels: &[String]) {
    let _ = write!(out, "{key} = [");
    for (idx, label) in labels.iter().enumerate() {
        if idx > 0 {
            out.push_str(", ");
        }
        out.push('"');
        for c in label.chars() {
            if c == '"' || c == '\\' {
                out.push('\\');
            }
            out.push(c);
        }
        out.push('"');
    }
    out.push_str("]\n");
}

fn profile_call(profile: &CocycleProfile) -> String {
    let mut phi = String::new();
    write_int_list(&mut phi, profile.values().iter().copied());
    match profile.target() {
        CocycleTarget::Finite(n) => {
            format!("twisted(n={n}, m={}, phi={phi})", profile.m())
        }
        CocycleTarget::InfiniteCyclic => {
            format!("twisted(n=inf, m={}, phi={phi})", profile.m())
        }
    }
}

pub fn write_family(fam: &GroupFamily) -> String {
    let rhs = match fam {
        GroupFamily::Holder { n, m, i, j } => format!("holder(n={n}, m={m}, i={i}, j={j})"),
        GroupFamily::FinByInf { n, t } => format!("fin_by_inf(n={n}, t={t})"),
        GroupFamily::InfByFinAbelian { n, t } => format!("inf_by_fin_abelian(n={n}, t={t})"),
        GroupFamily::InfByFinFlip { n } => format!("inf_by_fin_flip(n={n})"),
        GroupFamily::ZxZ => "zxz".to_owned(),
        GroupFamily::KleinBottle => "klein_bottle".to_owned(),
        GroupFamily::TwistedFinite(data) | GroupFamily::TwistedInfinite(data) => {
            profile_call(data.profile())
        }
    };
    format!("family = {rhs}\n")
}

pub fn write_profile(profile: &CocycleProfile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "m = {}", profile.m());
    match profile.target() {
        CocycleTarget::Finite(n) => {
            let _ = writeln!(out, "n = {n}");
        }
        CocycleTarget::InfiniteCyclic => out.push_str("n = inf\n"),
    }
    out.push_str("phi = ");
    write_int_list(&mut out, profile.values().iter().copied());
    out.push('\n');
    out
}

pub fn write_group(table: &FiniteGroupTable) -> String {
    let mut out = String::new();
    out.push_str("table = ");
    write_rows(&mut out, &table.rows());
    out.push('\n');
    if let Some(labels) = table.labels() {
        write_labels(&mut out, "labels", labels);
    }
    out
}

pub fn write_system(sys: &CrossedSystem) -> String {
    let mut out = String::new();
    out.push_str("h = ");
    write_rows(&mut out, &sys.h().rows());
    out.push('\n');
    if let Some(labels) = sys.h().labels() {
        write_labels(&mut out, "h_labels", labels);
    }
    out.push_str("g = ");
    write_rows(&mut out, &sys.g().rows());
    out.push('\n');
    if let Some(labels) = sys.g().labels() {
        write_labels(&mut out, "g_labels", labels);
    }
    out.push_str("alpha = ");
    write_rows(&mut out, sys.alpha().perms());
    out.push('\n');
    out.push_str("f = ");
    write_rows(&mut out, &sys.f().rows());
    out.push('\n');
    out
}

pub fn write_construct(c: &Construct) -> String {
    match c {
        Construct::Family(fam) => write_family(fam),
        Construct::Profile(p) => write_profile(p),
        Construct::System(s) => write_system(s),
        Construct::Group(t) => write_group(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(c: &Construct) {
        let text = write_construct(c);
        let parsed = parse_spec(&text).unwrap_or_else(|e| panic!("reparse failed: {e}\n{text}"));
        assert_eq!(&parsed, c, "not a fixed point:\n{text}");
    }

    #[test]
    fn parses_the_spec_examples() {
        match parse_spec("family = holder(n=4, m=2, i=2, j=3)\n").unwrap() {
            Construct::Family(GroupFamily::Holder { n: 4, m: 2, i: 2, j: 3 }) => {}
            other => panic!("{other:?}"),
        }
        match parse_spec("m = 3\nn = inf\nphi = [0,1,1]\n").unwrap() {
            Construct::Profile(p) => {
                assert_eq!(p.m(), 3);
                assert_eq!(p.target(), CocycleTarget::InfiniteCyclic);
                assert_eq!(p.values(), &[0, 1, 1]);
            }
            other => panic!("{other:?}"),
        }
        let err = parse_spec("m = 2\nn = 2\nphi = [1,0]\n").unwrap_err();
        assert!(matches!(err, CliError::Semantic { .. }), "{err:?}");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_spec("family = holder(n=4,\n").unwrap_err() {
            CliError::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert!(col > 1);
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_spec("= 3\n").is_err());
        assert!(parse_spec("m = \n").is_err());
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a profile\nm = 2\n\nn = 4   # finite target\nphi = [0, 3]\n";
        assert!(matches!(parse_spec(text).unwrap(), Construct::Profile(_)));
    }

    #[test]
    fn families_roundtrip() {
        let families = [
            GroupFamily::holder(4, 2, 2, 3).unwrap(),
            GroupFamily::fin_by_inf(5, 2).unwrap(),
            GroupFamily::inf_by_fin_abelian(3, -2).unwrap(),
            GroupFamily::inf_by_fin_flip(6).unwrap(),
            GroupFamily::ZxZ,
            GroupFamily::KleinBottle,
            GroupFamily::twisted_finite(
                CocycleProfile::new(2, CocycleTarget::Finite(2), vec![0, 1]).unwrap(),
            )
            .unwrap(),
            GroupFamily::twisted_infinite(
                CocycleProfile::new(3, CocycleTarget::InfiniteCyclic, vec![0, 1, 1]).unwrap(),
            )
            .unwrap(),
        ];
        for fam in families {
            roundtrip(&Construct::Family(fam));
        }
    }

    #[test]
    fn groups_and_systems_roundtrip() {
        roundtrip(&Construct::Group(FiniteGroupTable::cyclic(5)));
        let sys = CrossedSystem::trivial(
            FiniteGroupTable::cyclic(2),
            FiniteGroupTable::cyclic(3),
        );
        roundtrip(&Construct::System(sys));
    }

    #[test]
    fn cyclic_sugar_parses_groups() {
        match parse_spec("group = cyclic(6)\n").unwrap() {
            Construct::Group(t) => assert_eq!(t.order(), 6),
            other => panic!("{other:?}"),
        }
    }

    mod random_roundtrips {
        use super::*;
        use crossed_forge_core::profile_from_lex_index;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn finite_profiles(m in 2u64..6, n in 2u64..6, seed in 0u64..500) {
                let count = crossed_forge_core::profile_count(m, n).unwrap() as u64;
                let profile = profile_from_lex_index(m, n, seed % count);
                roundtrip(&Construct::Profile(profile));
            }

            #[test]
            fn infinite_profiles(m in 2u64..7, vals in proptest::collection::vec(-9i64..9, 6)) {
                let mut values = vec![0i64];
                values.extend(vals.into_iter().take(m as usize - 1));
                let profile =
                    CocycleProfile::new(m, CocycleTarget::InfiniteCyclic, values).unwrap();
                roundtrip(&Construct::Family(
                    GroupFamily::twisted_infinite(profile).unwrap(),
                ));
            }

            #[test]
            fn raw_families(n in 2u64..12, t in -12i64..12) {
                roundtrip(&Construct::Family(GroupFamily::InfByFinAbelian { n, t }));
                roundtrip(&Construct::Family(GroupFamily::FinByInf { n, t }));
            }
        }
    }
}
