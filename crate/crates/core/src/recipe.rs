//! textual recipes for building modules: a tree of construction tags with
//! recipe or file leaves, e.g. `tensor(kac0, dual(kac0))`,
//! `omega(trivial(ev), 2)`, `sum(w(3), free(1, od))`, or
//! `radical(fixtures/k0.json)`.
//!
//! leaves that do not fix their own algebra (`trivial`, `free`, `random`)
//! take it from the evaluation context: an explicit choice if given, else
//! the unique algebra fixed by other leaves of the tree, else
//! exterior(2).

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::algebra::{AlgebraSpec, ModuleError, Parity, Supermodule};
use crate::construct::{
    direct_sum, dual, dual_kac0, free_module, hom, kac0, omega, parity_shift, quotient_by_socle,
    radical, random_module, submodule, tensor, trivial, w_module,
};
use crate::format::{read_module_file, FormatError};

#[derive(Debug, Error)]
pub enum RecipeError {
    #[error("recipe parse error at byte {position}: {detail}")]
    Parse { position: usize, detail: String },
    #[error(transparent)]
    File(#[from] FormatError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Recipe {
    Trivial(Parity),
    Pi(Box<Recipe>),
    Sum(Vec<Recipe>),
    Tensor(Vec<Recipe>),
    Dual(Box<Recipe>),
    Hom(Box<Recipe>, Box<Recipe>),
    Kac0,
    DualKac0,
    Free { rank: usize, parity: Parity },
    Omega(Box<Recipe>, i64),
    QuotientBySocle(Box<Recipe>),
    Radical(Box<Recipe>),
    W(usize),
    Random { dim: usize, seed: u64 },
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Word(String, usize),
    LParen(usize),
    RParen(usize),
    Comma(usize),
}

impl Token {
    fn position(&self) -> usize {
        match self {
            Token::Word(_, p) | Token::LParen(p) | Token::RParen(p) | Token::Comma(p) => *p,
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, RecipeError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        match b {
            b'(' => {
                out.push(Token::LParen(pos));
                pos += 1;
            }
            b')' => {
                out.push(Token::RParen(pos));
                pos += 1;
            }
            b',' => {
                out.push(Token::Comma(pos));
                pos += 1;
            }
            _ if b.is_ascii_whitespace() => pos += 1,
            _ => {
                let start = pos;
                while pos < bytes.len()
                    && !matches!(bytes[pos], b'(' | b')' | b',')
                    && !bytes[pos].is_ascii_whitespace()
                {
                    pos += 1;
                }
                out.push(Token::Word(text[start..pos].to_string(), start));
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn error(&self, detail: impl Into<String>) -> RecipeError {
        let position = self.peek().map(Token::position).unwrap_or(usize::MAX);
        RecipeError::Parse {
            position: if position == usize::MAX { self.end_position() } else { position },
            detail: detail.into(),
        }
    }

    fn end_position(&self) -> usize {
        self.tokens.last().map(|t| t.position() + 1).unwrap_or(0)
    }

    fn expect_lparen(&mut self, tag: &str) -> Result<(), RecipeError> {
        match self.peek() {
            Some(Token::LParen(_)) => {
                self.at += 1;
                Ok(())
            }
            _ => Err(self.error(format!("`(` after `{tag}`"))),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), RecipeError> {
        match self.peek() {
            Some(Token::RParen(_)) => {
                self.at += 1;
                Ok(())
            }
            _ => Err(self.error("`)`")),
        }
    }

    fn expect_comma(&mut self) -> Result<(), RecipeError> {
        match self.peek() {
            Some(Token::Comma(_)) => {
                self.at += 1;
                Ok(())
            }
            _ => Err(self.error("`,`")),
        }
    }

    fn word(&mut self, what: &str) -> Result<(String, usize), RecipeError> {
        match self.peek() {
            Some(Token::Word(w, p)) => {
                let out = (w.clone(), *p);
                self.at += 1;
                Ok(out)
            }
            _ => Err(self.error(what.to_string())),
        }
    }

    fn integer<T: std::str::FromStr>(&mut self, what: &str) -> Result<T, RecipeError> {
        let (w, p) = self.word(what)?;
        w.parse::<T>()
            .map_err(|_| RecipeError::Parse { position: p, detail: format!("{what}, got `{w}`") })
    }

    fn parity(&mut self) -> Result<Parity, RecipeError> {
        let (w, p) = self.word("a parity (`ev` or `od`)")?;
        Parity::parse(&w).ok_or(RecipeError::Parse {
            position: p,
            detail: format!("a parity (`ev` or `od`), got `{w}`"),
        })
    }

    fn children(&mut self, tag: &str, at_least: usize) -> Result<Vec<Recipe>, RecipeError> {
        self.expect_lparen(tag)?;
        let mut out = vec![self.recipe()?];
        while matches!(self.peek(), Some(Token::Comma(_))) {
            self.at += 1;
            out.push(self.recipe()?);
        }
        self.expect_rparen()?;
        if out.len() < at_least {
            return Err(RecipeError::Parse {
                position: self.end_position(),
                detail: format!("`{tag}` needs at least {at_least} child recipes"),
            });
        }
        Ok(out)
    }

    fn one_child(&mut self, tag: &str) -> Result<Recipe, RecipeError> {
        self.expect_lparen(tag)?;
        let child = self.recipe()?;
        self.expect_rparen()?;
        Ok(child)
    }

    fn recipe(&mut self) -> Result<Recipe, RecipeError> {
        let (word, position) = self.word("a construction tag or module file path")?;
        match word.as_str() {
            "trivial" => {
                self.expect_lparen("trivial")?;
                let p = self.parity()?;
                self.expect_rparen()?;
                Ok(Recipe::Trivial(p))
            }
            "pi" => Ok(Recipe::Pi(Box::new(self.one_child("pi")?))),
            "sum" => Ok(Recipe::Sum(self.children("sum", 2)?)),
            "tensor" => Ok(Recipe::Tensor(self.children("tensor", 2)?)),
            "dual" => Ok(Recipe::Dual(Box::new(self.one_child("dual")?))),
            "hom" => {
                self.expect_lparen("hom")?;
                let a = self.recipe()?;
                self.expect_comma()?;
                let b = self.recipe()?;
                self.expect_rparen()?;
                Ok(Recipe::Hom(Box::new(a), Box::new(b)))
            }
            "kac0" => Ok(Recipe::Kac0),
            "dual_kac0" => Ok(Recipe::DualKac0),
            "free" => {
                self.expect_lparen("free")?;
                let rank: usize = self.integer("a rank")?;
                self.expect_comma()?;
                let p = self.parity()?;
                self.expect_rparen()?;
                Ok(Recipe::Free { rank, parity: p })
            }
            "omega" => {
                self.expect_lparen("omega")?;
                let child = self.recipe()?;
                self.expect_comma()?;
                let n: i64 = self.integer("an integer shift")?;
                self.expect_rparen()?;
                Ok(Recipe::Omega(Box::new(child), n))
            }
            "quotient_by_socle" => {
                Ok(Recipe::QuotientBySocle(Box::new(self.one_child("quotient_by_socle")?)))
            }
            "radical" => Ok(Recipe::Radical(Box::new(self.one_child("radical")?))),
            "w" | "w_module" => {
                self.expect_lparen(&word)?;
                let n: usize = self.integer("a width")?;
                self.expect_rparen()?;
                Ok(Recipe::W(n))
            }
            "random" => {
                self.expect_lparen("random")?;
                let dim: usize = self.integer("a dimension")?;
                self.expect_comma()?;
                let seed: u64 = self.integer("a seed")?;
                self.expect_rparen()?;
                Ok(Recipe::Random { dim, seed })
            }
            _ if word.contains('.') || word.contains('/') => {
                Ok(Recipe::File(PathBuf::from(word)))
            }
            _ => Err(RecipeError::Parse {
                position,
                detail: format!(
                    "unknown tag `{word}`; known tags: trivial, pi, sum, tensor, dual, hom, \
                     kac0, dual_kac0, free, omega, quotient_by_socle, radical, w, w_module, \
                     random; file paths must contain `.` or `/`"
                ),
            }),
        }
    }
}

pub fn parse_recipe(text: &str) -> Result<Recipe, RecipeError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, at: 0 };
    let recipe = parser.recipe()?;
    if let Some(t) = parser.peek() {
        return Err(RecipeError::Parse {
            position: t.position(),
            detail: "trailing input after the recipe".to_string(),
        });
    }
    Ok(recipe)
}

impl Recipe {
    /// the algebra this recipe fixes by itself, if any: kac modules are
    /// sl(1|1) modules, zigzags live over exterior(2), files carry their
    /// own algebra. combination nodes report the first fixed child.
    fn fixed_algebra(&self, base: &Path) -> Option<AlgebraSpec> {
        match self {
            Recipe::Kac0 | Recipe::DualKac0 => Some(AlgebraSpec::sl11()),
            Recipe::W(_) => Some(AlgebraSpec::exterior(2)),
            Recipe::File(p) => {
                let path = if p.is_absolute() { p.clone() } else { base.join(p) };
                read_module_file(&path).ok().map(|f| f.module.algebra().clone())
            }
            Recipe::Trivial(_) | Recipe::Free { .. } | Recipe::Random { .. } => None,
            Recipe::Pi(c)
            | Recipe::Dual(c)
            | Recipe::Omega(c, _)
            | Recipe::QuotientBySocle(c)
            | Recipe::Radical(c) => c.fixed_algebra(base),
            Recipe::Sum(cs) | Recipe::Tensor(cs) => {
                cs.iter().find_map(|c| c.fixed_algebra(base))
            }
            Recipe::Hom(a, b) => a.fixed_algebra(base).or_else(|| b.fixed_algebra(base)),
        }
    }

    /// evaluate relative to `base` for file leaves. `algebra` pins the
    /// context for leaves that need one; otherwise the context is inferred
    /// from the tree, defaulting to exterior(2).
    pub fn eval(
        &self,
        base: &Path,
        algebra: Option<&AlgebraSpec>,
    ) -> Result<Supermodule, RecipeError> {
        let context = match algebra {
            Some(a) => a.clone(),
            None => self.fixed_algebra(base).unwrap_or(AlgebraSpec::exterior(2)),
        };
        self.eval_in(base, &context)
    }

    fn eval_in(&self, base: &Path, context: &AlgebraSpec) -> Result<Supermodule, RecipeError> {
        match self {
            Recipe::Trivial(p) => Ok(trivial(context.clone(), *p)),
            Recipe::Pi(c) => Ok(parity_shift(&c.eval_in(base, context)?)),
            Recipe::Sum(cs) => {
                let mut acc = cs[0].eval_in(base, context)?;
                for c in &cs[1..] {
                    acc = direct_sum(&acc, &c.eval_in(base, context)?)?;
                }
                Ok(acc)
            }
            Recipe::Tensor(cs) => {
                let mut acc = cs[0].eval_in(base, context)?;
                for c in &cs[1..] {
                    acc = tensor(&acc, &c.eval_in(base, context)?)?;
                }
                Ok(acc)
            }
            Recipe::Dual(c) => Ok(dual(&c.eval_in(base, context)?)),
            Recipe::Hom(a, b) => {
                Ok(hom(&a.eval_in(base, context)?, &b.eval_in(base, context)?)?)
            }
            Recipe::Kac0 => Ok(kac0()),
            Recipe::DualKac0 => Ok(dual_kac0()),
            Recipe::Free { rank, parity } => Ok(free_module(context, *rank, *parity)),
            Recipe::Omega(c, n) => Ok(omega(&c.eval_in(base, context)?, *n)?),
            Recipe::QuotientBySocle(c) => {
                Ok(quotient_by_socle(&c.eval_in(base, context)?))
            }
            Recipe::Radical(c) => {
                let m = c.eval_in(base, context)?;
                let (sub, _) = submodule(&m, &radical(&m))?;
                Ok(sub)
            }
            Recipe::W(n) => Ok(w_module(*n)),
            Recipe::Random { dim, seed } => Ok(random_module(context, *dim, *seed)?),
            Recipe::File(p) => {
                let path = if p.is_absolute() { p.clone() } else { base.join(p) };
                Ok(read_module_file(&path)?.module)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SuperDim;
    use crate::format::write_module_file;

    fn eval(text: &str) -> Supermodule {
        parse_recipe(text).unwrap().eval(Path::new("."), None).unwrap()
    }

    #[test]
    fn grammar_round_trip_examples() {
        assert_eq!(eval("kac0").dim(), 2);
        assert_eq!(eval("tensor(kac0, dual(kac0))").dim(), 4);
        assert_eq!(eval("w(3)").dim(), 5);
        assert_eq!(eval("w_module(3)"), eval("w(3)"));
        assert_eq!(eval("sum(kac0, dual_kac0)").dim(), 4);
        assert_eq!(eval("free(2, od)").superdim(), SuperDim { even: 4, odd: 4 });
        assert_eq!(eval("pi(trivial(ev))").superdim(), SuperDim { even: 0, odd: 1 });
        assert_eq!(eval("random(6, 11)").dim(), 6);
        assert_eq!(eval("radical(w(3))").dim(), 2);
        assert_eq!(eval("quotient_by_socle(free(1, ev))").dim(), 3);
        assert_eq!(eval("hom(kac0, kac0)").dim(), 4);
    }

    #[test]
    fn omega_uses_inferred_or_default_context() {
        // no fixed leaf: defaults to exterior(2)
        let m = eval("omega(trivial(ev), 2)");
        assert_eq!(m.algebra(), &AlgebraSpec::exterior(2));
        assert_eq!(m.dim(), 5);
        // a fixed leaf pins the context of the trivial leaf
        let m = eval("sum(trivial(ev), kac0)");
        assert_eq!(m.algebra(), &AlgebraSpec::sl11());
        assert_eq!(m.dim(), 3);
    }

    #[test]
    fn explicit_context_wins() {
        let e4 = AlgebraSpec::exterior(4);
        let m = parse_recipe("omega(trivial(ev), 1)")
            .unwrap()
            .eval(Path::new("."), Some(&e4))
            .unwrap();
        assert_eq!(m.algebra(), &e4);
        assert_eq!(m.dim(), 15);
    }

    #[test]
    fn file_leaves_resolve_relative_to_base() {
        let dir = std::env::temp_dir().join("recipe-file-leaf-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("k.json");
        write_module_file(&path, &kac0(), Some(true)).unwrap();
        let m = parse_recipe("dual(k.json)").unwrap().eval(&dir, None).unwrap();
        assert_eq!(m, dual(&kac0()));
        // file leaves fix the context
        let m = parse_recipe("sum(trivial(od), k.json)").unwrap().eval(&dir, None).unwrap();
        assert_eq!(m.algebra(), &AlgebraSpec::sl11());
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn parse_errors_name_position_and_expectation() {
        let e = parse_recipe("mystery(3)").unwrap_err();
        assert!(e.to_string().contains("unknown tag `mystery`"));
        let e = parse_recipe("sum(kac0)").unwrap_err();
        assert!(e.to_string().contains("at least 2"));
        let e = parse_recipe("w(two)").unwrap_err();
        assert!(e.to_string().contains("a width"));
        let e = parse_recipe("kac0 extra").unwrap_err();
        assert!(e.to_string().contains("trailing"));
        let e = parse_recipe("free(1 od)").unwrap_err();
        assert!(e.to_string().contains("`,`"));
        let e = parse_recipe("trivial(mid)").unwrap_err();
        assert!(e.to_string().contains("parity"));
    }

    #[test]
    fn missing_file_is_reported() {
        let e = parse_recipe("dual(no_such_file.json)")
            .unwrap()
            .eval(Path::new("/nonexistent-base"), None)
            .unwrap_err();
        assert!(matches!(e, RecipeError::File(FormatError::Io { .. })));
    }

    #[test]
    fn nary_sums_and_tensors_fold() {
        let m = eval("sum(trivial(ev), trivial(od), trivial(ev))");
        assert_eq!(m.superdim(), SuperDim { even: 2, odd: 1 });
        let t = eval("tensor(free(1, ev), trivial(ev), trivial(ev))");
        assert_eq!(t.dim(), 4);
    }
}
