//! Token parsing shared by braid and free-group words.
//!
//! Accepted forms: `s1 s2^-1 s3^2` (or `g1 g2^-1` for free words), bare
//! signed integers `1 -2 3`, and JSON-style lists `[1, -2, 3]`.

use crate::error::{Error, Result};

pub(crate) fn parse_letters(input: &str, prefix: char) -> Result<Vec<i32>> {
    let mut letters = Vec::new();
    let bytes: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() || c == ',' || c == '[' || c == ']' || c == '*' || c == '.' {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && !(bytes[i].is_whitespace() || matches!(bytes[i], ',' | '[' | ']' | '*' | '.')) {
            i += 1;
        }
        let token: String = bytes[start..i].iter().collect();
        letters.extend(parse_token(&token, prefix, start + 1)?);
    }
    Ok(letters)
}

fn parse_token(token: &str, prefix: char, column: usize) -> Result<Vec<i32>> {
    let err = |message: String| Error::Parse { column, message };
    let lower = token.to_ascii_lowercase();
    if lower == "e" {
        return Ok(Vec::new());
    }
    if let Some(rest) = lower.strip_prefix(prefix) {
        let (index_part, exp_part) = match rest.split_once('^') {
            Some((a, b)) => (a, Some(b)),
            None => (rest, None),
        };
        let index: i64 = index_part
            .parse()
            .map_err(|_| err(format!("malformed generator '{token}'")))?;
        if index < 1 {
            return Err(err("generator index must be ≥ 1".into()));
        }
        let exp: i64 = match exp_part {
            Some(e) => e
                .trim_start_matches('(')
                .trim_end_matches(')')
                .parse()
                .map_err(|_| err(format!("malformed exponent in '{token}'")))?,
            None => 1,
        };
        if exp.unsigned_abs() > 1_000_000 || index > i32::MAX as i64 {
            return Err(err(format!("exponent or index too large in '{token}'")));
        }
        let letter = if exp < 0 { -(index as i32) } else { index as i32 };
        Ok(vec![letter; exp.unsigned_abs() as usize])
    } else {
        let value: i64 = lower
            .parse()
            .map_err(|_| err(format!("unrecognized token '{token}'")))?;
        if value == 0 {
            return Err(err("generator index must be ≥ 1".into()));
        }
        if value.unsigned_abs() > i32::MAX as u64 {
            return Err(err(format!("index too large in '{token}'")));
        }
        Ok(vec![value as i32])
    }
}

pub(crate) fn format_letters(letters: &[i32], prefix: char) -> String {
    if letters.is_empty() {
        return "e".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        let run = (j - i) as i64;
        let l = letters[i];
        let exp = if l < 0 { -run } else { run };
        if exp == 1 {
            parts.push(format!("{prefix}{}", l.abs()));
        } else {
            parts.push(format!("{prefix}{}^{}", l.abs(), exp));
        }
        i = j;
    }
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_forms() {
        assert_eq!(parse_letters("s1 s2^-1", 's').unwrap(), vec![1, -2]);
        assert_eq!(parse_letters("[1, -2, 3]", 's').unwrap(), vec![1, -2, 3]);
        assert_eq!(parse_letters("s1^3", 's').unwrap(), vec![1, 1, 1]);
        assert_eq!(parse_letters("", 's').unwrap(), Vec::<i32>::new());
        assert_eq!(parse_letters("e", 's').unwrap(), Vec::<i32>::new());
        assert_eq!(parse_letters("g2^-1 g1", 'g').unwrap(), vec![-2, 1]);
    }

    #[test]
    fn reports_column() {
        match parse_letters("s1 s0", 's') {
            Err(Error::Parse { column, message }) => {
                assert_eq!(column, 4);
                assert_eq!(message, "generator index must be ≥ 1");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_letters("s1 x2", 's'), Err(Error::Parse { column: 4, .. })));
    }

    #[test]
    fn formats_runs() {
        assert_eq!(format_letters(&[1, 1, -2, 3], 's'), "s1^2 s2^-1 s3");
        assert_eq!(format_letters(&[], 's'), "e");
    }
}
