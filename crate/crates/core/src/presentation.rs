//! Line-oriented presentation files.
//!
//! ```text
//! # comment lines
//! name: trefoil
//! fibered: true
//! generators: a b
//! map:
//!   a -> b
//!   b -> b A
//! inverse:
//!   a -> B a
//!   b -> a
//! ```
//!
//! Uppercase letters are inverses and `e` is the identity word. The
//! `inverse:` block is optional. Comment lines are kept and written back
//! first on serialization, so canonical files round-trip byte for byte.

use crate::error::{Error, Result};
use crate::freegroup::{Alphabet, FreeMap, Word};
use crate::verdict::KnotRecord;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Block {
    None,
    Map,
    Inverse,
}

struct MapBlock {
    header_line: usize,
    images: Vec<Option<Word>>,
}

impl MapBlock {
    fn new(header_line: usize, rank: usize) -> Self {
        MapBlock {
            header_line,
            images: vec![None; rank],
        }
    }

    fn finish(self, alphabet: &Alphabet, what: &str) -> Result<Vec<Word>> {
        self.images
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| {
                    err(
                        self.header_line,
                        format!(
                            "{what} block has no line for generator {:?}",
                            alphabet.name(i)
                        ),
                    )
                })
            })
            .collect()
    }
}

pub fn parse_presentation(text: &str) -> Result<KnotRecord> {
    let mut notes = Vec::new();
    let mut name: Option<String> = None;
    let mut fibered: Option<bool> = None;
    let mut alphabet: Option<Alphabet> = None;
    let mut map: Option<MapBlock> = None;
    let mut inverse: Option<MapBlock> = None;
    let mut block = Block::None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            notes.push(comment.strip_prefix(' ').unwrap_or(comment).to_string());
            continue;
        }
        let indented = raw.starts_with(' ') || raw.starts_with('\t');
        if indented && block != Block::None {
            let alphabet = alphabet
                .as_ref()
                .expect("blocks open only after generators");
            let target = match block {
                Block::Map => map.as_mut(),
                Block::Inverse => inverse.as_mut(),
                Block::None => None,
            }
            .expect("open block");
            let (lhs, rhs) = trimmed
                .split_once("->")
                .ok_or_else(|| err(line_no, format!("expected `g -> word`, found {trimmed:?}")))?;
            let lhs = lhs.trim();
            let mut chars = lhs.chars();
            let g = match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_lowercase() => c,
                _ => return Err(err(line_no, format!("bad generator {lhs:?}"))),
            };
            let index = alphabet
                .index_of(g)
                .ok_or_else(|| err(line_no, format!("unknown generator {g:?}")))?;
            if target.images[index].is_some() {
                return Err(err(line_no, format!("duplicate line for generator {g:?}")));
            }
            let word = alphabet.parse_word(rhs).map_err(|e| match e {
                Error::BadToken(t) => err(line_no, format!("unreadable token {t:?}")),
                other => err(line_no, other.to_string()),
            })?;
            target.images[index] = Some(word);
            continue;
        }
        block = Block::None;
        let (key, value) = trimmed
            .split_once(':')
            .ok_or_else(|| err(line_no, format!("unreadable line {trimmed:?}")))?;
        let value = value.trim();
        match key.trim() {
            "name" => {
                if value.is_empty() {
                    return Err(err(line_no, "empty name"));
                }
                name = Some(value.to_string());
            }
            "fibered" => {
                fibered = Some(match value {
                    "true" => true,
                    "false" => false,
                    _ => {
                        return Err(err(
                            line_no,
                            format!("fibered must be true or false, got {value:?}"),
                        ))
                    }
                });
            }
            "generators" => {
                let mut names = Vec::new();
                for tok in value.split_whitespace() {
                    let mut cs = tok.chars();
                    match (cs.next(), cs.next()) {
                        (Some(c), None) => names.push(c),
                        _ => return Err(err(line_no, format!("bad generator name {tok:?}"))),
                    }
                }
                if names.is_empty() {
                    return Err(err(line_no, "no generators"));
                }
                alphabet = Some(Alphabet::new(names).map_err(|e| err(line_no, e.to_string()))?);
            }
            "map" | "inverse" => {
                if !value.is_empty() {
                    return Err(err(
                        line_no,
                        format!("unexpected text after `{}:`", key.trim()),
                    ));
                }
                let rank = alphabet
                    .as_ref()
                    .ok_or_else(|| err(line_no, "`generators:` must come before map blocks"))?
                    .rank();
                let slot = if key.trim() == "map" {
                    &mut map
                } else {
                    &mut inverse
                };
                if slot.is_some() {
                    return Err(err(line_no, format!("duplicate `{}:` block", key.trim())));
                }
                *slot = Some(MapBlock::new(line_no, rank));
                block = if key.trim() == "map" {
                    Block::Map
                } else {
                    Block::Inverse
                };
            }
            other => return Err(err(line_no, format!("unknown key {other:?}"))),
        }
    }

    let end = last_line.max(1);
    let name = name.ok_or_else(|| err(end, "missing `name:`"))?;
    let fibered = fibered.ok_or_else(|| err(end, "missing `fibered:`"))?;
    let alphabet = alphabet.ok_or_else(|| err(end, "missing `generators:`"))?;
    let map = map.ok_or_else(|| err(end, "missing `map:` block"))?;
    let images = map.finish(&alphabet, "map")?;
    let rank = alphabet.rank();
    let phi = match inverse {
        Some(inv) => FreeMap::with_inverse(rank, images, inv.finish(&alphabet, "inverse")?)?,
        None => FreeMap::new(rank, images)?,
    };
    let mut record = KnotRecord::new(name, fibered, alphabet, phi)?;
    record.notes = notes;
    Ok(record)
}

/// Canonical text form; inverse of [`parse_presentation`] on canonical files.
pub fn format_presentation(k: &KnotRecord) -> String {
    let mut out = String::new();
    for note in &k.notes {
        if note.is_empty() {
            out.push_str("#\n");
        } else {
            out.push_str(&format!("# {note}\n"));
        }
    }
    let a = &k.alphabet;
    out.push_str(&format!("name: {}\n", k.name));
    out.push_str(&format!("fibered: {}\n", k.fibered));
    let names: Vec<String> = a.names().iter().map(|c| c.to_string()).collect();
    out.push_str(&format!("generators: {}\n", names.join(" ")));
    out.push_str("map:\n");
    for line in k.phi.describe(a) {
        out.push_str(&format!("  {line}\n"));
    }
    if let Some(inv) = k.phi.inverse_images() {
        out.push_str("inverse:\n");
        for (i, w) in inv.iter().enumerate() {
            out.push_str(&format!("  {} -> {}\n", a.name(i), w.display(a)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str =
        "name: trefoil\nfibered: true\ngenerators: a b\nmap:\n  a -> b\n  b -> b A\n";

    #[test]
    fn parses_trefoil() {
        let k = parse_presentation(TREFOIL).unwrap();
        assert_eq!(k.name, "trefoil");
        assert!(k.fibered);
        assert_eq!(k.rank(), 2);
        assert_eq!(format_presentation(&k), TREFOIL);
    }

    #[test]
    fn six_two_images() {
        let text = "name: 6_2\nfibered: true\ngenerators: x a b c\nmap:\n  x -> x x b\n  a -> B X\n  b -> C\n  c -> a b c\n";
        let k = parse_presentation(text).unwrap();
        assert_eq!(k.rank(), 4);
        assert_eq!(k.alphabet.format_word(k.phi.image(1)), "B X");
    }

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn missing_map_line_reports_the_block_header() {
        let text = "name: k\nfibered: true\ngenerators: a b\nmap:\n  a -> b\n";
        assert_eq!(line_of(parse_presentation(text).unwrap_err()), 4);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let unknown = "name: k\nfibered: true\ngenerators: a b\nmap:\n  a -> b\n  c -> a\n";
        assert_eq!(line_of(parse_presentation(unknown).unwrap_err()), 6);
        let dup = "name: k\nfibered: true\ngenerators: a b\nmap:\n  a -> b\n  a -> a\n  b -> a\n";
        assert_eq!(line_of(parse_presentation(dup).unwrap_err()), 6);
        let token = "name: k\nfibered: true\ngenerators: a b\nmap:\n  a -> b q\n  b -> a\n";
        assert_eq!(line_of(parse_presentation(token).unwrap_err()), 5);
        let key = "name: k\nfibred: true\n";
        assert_eq!(line_of(parse_presentation(key).unwrap_err()), 2);
        let flag = "name: k\nfibered: yes\n";
        assert_eq!(line_of(parse_presentation(flag).unwrap_err()), 2);
    }

    #[test]
    fn identity_token_and_comments() {
        let text =
            "# a comment\n\nname: k\nfibered: false\ngenerators: a b\nmap:\n  a -> e\n  b -> b\n";
        let k = parse_presentation(text).unwrap();
        assert!(k.phi.image(0).is_identity());
        assert_eq!(k.notes, vec!["a comment".to_string()]);
    }
}
