//! Parser for the group-spec grammar:
//!
//! ```text
//! spec := Z n | D m | Q m | S n | A n
//!       | DP (spec) (spec)
//!       | PERM k ; gen ; gen ; ...      gen := one or more (p1 p2 ...) cycles
//!       | SPEC name : m1,m2,...
//! ```
//!
//! `D m` takes the group order (m = 2n), `Q m` likewise (m = 4t).

use std::collections::BTreeSet;

use super::{GroupError, GroupSpec, Permutation};

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, GroupError> {
    let mut cursor = Cursor { text, pos: 0 };
    let spec = parse_spec(&mut cursor)?;
    cursor.skip_ws();
    if !cursor.at_end() {
        return Err(cursor.error("trailing input after group spec"));
    }
    spec.validate()?;
    Ok(spec)
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn error(&self, message: impl Into<String>) -> GroupError {
        GroupError::Parse { position: self.pos, message: message.into() }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn expect(&mut self, c: char) -> Result<(), GroupError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    /// Next run of non-whitespace, non-delimiter characters.
    fn word(&mut self) -> Result<&'a str, GroupError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if !c.is_whitespace() && !"();:,".contains(c)) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected a token"));
        }
        Ok(&self.text[start..self.pos])
    }

    /// Position of the next token (after whitespace).
    fn token_pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn number(&mut self) -> Result<u64, GroupError> {
        let at = self.token_pos();
        let word = self.word()?;
        word.parse::<u64>().map_err(|_| GroupError::Parse {
            position: at,
            message: format!("expected a number, found `{word}`"),
        })
    }
}

fn parse_spec(cursor: &mut Cursor) -> Result<GroupSpec, GroupError> {
    cursor.skip_ws();
    let at = cursor.pos;
    let keyword = cursor.word()?;
    match keyword {
        "Z" => Ok(GroupSpec::Cyclic(cursor.number()?)),
        "D" => {
            let at = cursor.token_pos();
            let m = cursor.number()?;
            if m % 2 != 0 {
                return Err(GroupError::Parse {
                    position: at,
                    message: format!("dihedral group order must be even, got {m}"),
                });
            }
            Ok(GroupSpec::Dihedral(m / 2))
        }
        "Q" => {
            let at = cursor.token_pos();
            let m = cursor.number()?;
            if m % 4 != 0 {
                return Err(GroupError::Parse {
                    position: at,
                    message: format!("dicyclic group order must be divisible by 4, got {m}"),
                });
            }
            Ok(GroupSpec::Dicyclic(m / 4))
        }
        "S" => Ok(GroupSpec::Symmetric(degree(cursor)?)),
        "A" => Ok(GroupSpec::Alternating(degree(cursor)?)),
        "DP" => {
            cursor.expect('(')?;
            let left = parse_spec(cursor)?;
            cursor.expect(')')?;
            cursor.expect('(')?;
            let right = parse_spec(cursor)?;
            cursor.expect(')')?;
            Ok(GroupSpec::DirectProduct(Box::new(left), Box::new(right)))
        }
        "PERM" => parse_perm_group(cursor),
        "SPEC" => parse_spectrum_group(cursor),
        other => Err(GroupError::Parse {
            position: at,
            message: format!("unknown group family `{other}` (expected Z, D, Q, S, A, DP, PERM, or SPEC)"),
        }),
    }
}

fn degree(cursor: &mut Cursor) -> Result<u32, GroupError> {
    let at = cursor.token_pos();
    let n = cursor.number()?;
    u32::try_from(n).map_err(|_| GroupError::Parse {
        position: at,
        message: format!("degree {n} too large"),
    })
}

fn parse_perm_group(cursor: &mut Cursor) -> Result<GroupSpec, GroupError> {
    let points = cursor.number()? as usize;
    if points == 0 {
        return Err(cursor.error("permutation groups need at least one point"));
    }
    let mut generators = Vec::new();
    loop {
        cursor.skip_ws();
        if cursor.peek() != Some(';') {
            break;
        }
        cursor.bump();
        generators.push(parse_generator(cursor, points)?);
    }
    if generators.is_empty() {
        return Err(cursor.error("expected `; (cycle...)` generator list"));
    }
    Ok(GroupSpec::PermGroup { points, generators })
}

fn parse_generator(cursor: &mut Cursor, points: usize) -> Result<Permutation, GroupError> {
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    loop {
        cursor.skip_ws();
        if cursor.peek() != Some('(') {
            break;
        }
        cursor.bump();
        let mut cycle = Vec::new();
        loop {
            cursor.skip_ws();
            match cursor.peek() {
                Some(')') => {
                    cursor.bump();
                    break;
                }
                Some(c) if c.is_ascii_digit() => {
                    let n = cursor.number()?;
                    cycle.push(u32::try_from(n).map_err(|_| cursor.error("point too large"))?);
                }
                _ => return Err(cursor.error("expected a point or `)` inside cycle")),
            }
        }
        cycles.push(cycle);
    }
    if cycles.is_empty() {
        return Err(cursor.error("expected at least one (cycle) in generator"));
    }
    Permutation::from_cycles(points, &cycles)
}

fn parse_spectrum_group(cursor: &mut Cursor) -> Result<GroupSpec, GroupError> {
    let name = cursor.word()?.to_owned();
    cursor.expect(':')?;
    let mut pi_e = BTreeSet::new();
    loop {
        pi_e.insert(cursor.number()?);
        cursor.skip_ws();
        if cursor.peek() == Some(',') {
            cursor.bump();
        } else {
            break;
        }
    }
    Ok(GroupSpec::SpectrumGroup { name, pi_e })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shorthands() {
        assert_eq!(parse_group_spec("D 12").unwrap(), GroupSpec::Dihedral(6));
        assert_eq!(parse_group_spec("S 7").unwrap(), GroupSpec::Symmetric(7));
        assert_eq!(parse_group_spec("Q 8").unwrap(), GroupSpec::Dicyclic(2));
        assert_eq!(parse_group_spec("Z 1").unwrap(), GroupSpec::Cyclic(1));
    }

    #[test]
    fn direct_product_recursion() {
        assert_eq!(
            parse_group_spec("DP (Z 4) (S 3)").unwrap(),
            GroupSpec::DirectProduct(
                Box::new(GroupSpec::Cyclic(4)),
                Box::new(GroupSpec::Symmetric(3))
            )
        );
        let nested = parse_group_spec("DP (DP (Z 2) (Z 3)) (A 4)").unwrap();
        assert_eq!(nested.to_string(), "DP (DP (Z 2) (Z 3)) (A 4)");
    }

    #[test]
    fn perm_group_with_nested_parens() {
        let spec = parse_group_spec("PERM 5 ; (1 2 3)(4 5) ; (1 2)").unwrap();
        match &spec {
            GroupSpec::PermGroup { points, generators } => {
                assert_eq!(*points, 5);
                assert_eq!(generators.len(), 2);
                assert_eq!(generators[0].order(), 6);
            }
            other => panic!("parsed {other:?}"),
        }
        let inside_dp = parse_group_spec("DP (PERM 3 ; (1 2)) (Z 2)").unwrap();
        assert_eq!(inside_dp.to_string(), "DP (PERM 3 ; (1 2)) (Z 2)");
    }

    #[test]
    fn spectrum_group_literal() {
        let spec = parse_group_spec("SPEC M23 : 2,3,4,5,6,7,8,11,14,15,23").unwrap();
        match &spec {
            GroupSpec::SpectrumGroup { name, pi_e } => {
                assert_eq!(name, "M23");
                assert_eq!(pi_e.len(), 11);
            }
            other => panic!("parsed {other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        match parse_group_spec("D 13") {
            Err(GroupError::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_group_spec("Z x").is_err());
        assert!(parse_group_spec("W 4").is_err());
        assert!(parse_group_spec("Z 4 junk").is_err());
        assert!(parse_group_spec("D 4").is_err()); // n = 2 < 3
        assert!(parse_group_spec("SPEC X : 6").is_err()); // not divisor-closed
        assert!(parse_group_spec("SPEC X : 1,2").is_err()); // 1 not allowed
    }
}
