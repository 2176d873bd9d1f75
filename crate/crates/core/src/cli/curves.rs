//! Curve lines: `label: a1 a2 a3 a4 a6`, optionally followed by
//! `; key=value` assertions.

use std::path::Path;

use crate::arith::rational::parse_rational;
use crate::curve::model::WeierstrassModel;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRecord {
    pub label: String,
    pub model: WeierstrassModel,
    /// The user asserts the curve is an optimal quotient of `J0(N)`.
    pub modular_quotient: Option<bool>,
}

impl CurveRecord {
    pub fn to_line(&self) -> String {
        let mut s = format!("{}: {}", self.label, self.model.to_line());
        if let Some(q) = self.modular_quotient {
            s.push_str(&format!("; modular-quotient={q}"));
        }
        s
    }
}

/// Parses one curve line. Positions in errors are 1-based columns.
pub fn parse_curve_line(line: &str) -> Result<CurveRecord> {
    let err = |position: usize, message: &str| Error::Parse { position, message: message.into() };
    let (label, rest) = line.split_once(':').ok_or_else(|| err(line.len() + 1, "expected `label:`"))?;
    let label = label.trim();
    if label.is_empty() {
        return Err(err(1, "empty label"));
    }
    let (coeffs, props) = match rest.split_once(';') {
        Some((c, p)) => (c, Some(p)),
        None => (rest, None),
    };
    let base = label.len() + 1;
    let mut values = Vec::new();
    let mut column = base;
    for piece in coeffs.split_inclusive(char::is_whitespace) {
        let token = piece.trim();
        let start = column + (piece.len() - piece.trim_start().len()) + 1;
        column += piece.len();
        if token.is_empty() {
            continue;
        }
        let q = parse_rational(token).ok_or_else(|| err(start, &format!("not a rational: {token:?}")))?;
        values.push(q);
    }
    if values.len() != 5 {
        return Err(err(column + 1, &format!("expected 5 coefficients, found {}", values.len())));
    }
    let mut modular_quotient = None;
    if let Some(props) = props {
        let start = base + coeffs.len() + 2;
        for prop in props.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match prop.split_once('=') {
                Some(("modular-quotient", "true")) => modular_quotient = Some(true),
                Some(("modular-quotient", "false")) => modular_quotient = Some(false),
                _ => return Err(err(start, &format!("unknown property {prop:?}"))),
            }
        }
    }
    let [a1, a2, a3, a4, a6]: [_; 5] = values.try_into().unwrap();
    let model = WeierstrassModel::new(a1, a2, a3, a4, a6)?;
    Ok(CurveRecord { label: label.to_string(), model, modular_quotient })
}

/// All curve lines of a file; blank lines and `#` comments are skipped.
pub fn read_curve_file(path: &Path) -> Result<Vec<CurveRecord>> {
    let text = std::fs::read_to_string(path)?;
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(parse_curve_line).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = parse_curve_line("X0_11: 0 -1 1 -10 -20").unwrap();
        assert_eq!(r.label, "X0_11");
        assert_eq!(r.model, WeierstrassModel::from_ints([0, -1, 1, -10, -20]).unwrap());
        assert_eq!(parse_curve_line("bad: 0 0 0 0 0"), Err(Error::SingularModel));
        match parse_curve_line("oops: 1 2 three") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 11),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_curve_line("no colon 1 2 3 4 5"), Err(Error::Parse { .. })));
        assert!(matches!(parse_curve_line("short: 1 2 3"), Err(Error::Parse { .. })));
        let q = parse_curve_line("half: 1/2 0 0 3/2 -1; modular-quotient=true").unwrap();
        assert_eq!(q.modular_quotient, Some(true));
        assert_eq!(parse_curve_line(&q.to_line()).unwrap(), q);
    }
}
