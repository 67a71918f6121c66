use super::WordError;

/// Letters `a`, `b` stand for `x1`, `x2`. A postfix `'` inverts, `^n`
/// raises to an integer power, and a lone `1` is the identity. Whitespace
/// is optional between letters.
pub(crate) fn parse_letters(text: &str) -> Result<Vec<i32>, WordError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        i += 1;
        let gen = match c {
            c if c.is_whitespace() => continue,
            '1' => continue,
            'a' => 1,
            'b' => 2,
            'x' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                match digits.parse::<i32>() {
                    Ok(n) if n >= 1 => n,
                    _ => return Err(WordError::parse(text, "expected x followed by an index")),
                }
            }
            other => {
                return Err(WordError::parse(
                    text,
                    format!("unexpected character {other:?}"),
                ))
            }
        };
        let mut letter = gen;
        while i < chars.len() && chars[i] == '\'' {
            letter = -letter;
            i += 1;
        }
        let mut power = 1i64;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            if i < chars.len() && chars[i] == '-' {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            power = digits
                .parse()
                .map_err(|_| WordError::parse(text, "bad exponent"))?;
        }
        let l = if power < 0 { -letter } else { letter };
        for _ in 0..power.unsigned_abs() {
            out.push(l);
        }
    }
    Ok(out)
}

pub(crate) fn format_letters(letters: &[i32], ab: bool) -> String {
    if letters.is_empty() {
        return "1".to_string();
    }
    letters
        .iter()
        .map(|&l| {
            let g = l.unsigned_abs();
            let mut s = match (ab, g) {
                (true, 1) => "a".to_string(),
                (true, 2) => "b".to_string(),
                _ => format!("x{g}"),
            };
            if l < 0 {
                s.push('\'');
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_letters("a b a' b'").unwrap(), vec![1, 2, -1, -2]);
        assert_eq!(parse_letters("ab'").unwrap(), vec![1, -2]);
        assert_eq!(parse_letters("x3 x12'").unwrap(), vec![3, -12]);
        assert_eq!(parse_letters("x1^2 x2^-1").unwrap(), vec![1, 1, -2]);
        assert_eq!(parse_letters("1").unwrap(), Vec::<i32>::new());
        assert!(parse_letters("c").is_err());
        assert!(parse_letters("x").is_err());
        assert!(parse_letters("a^").is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_letters(&[1, -2], true), "a b'");
        assert_eq!(format_letters(&[1, -2], false), "x1 x2'");
        assert_eq!(format_letters(&[], true), "1");
    }
}
