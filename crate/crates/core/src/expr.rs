//! Expression language over all exact structures.
//!
//! ```text
//! expr    := literal | call
//! literal := NAT ["@" NAT] | NAT "@p" | SIGN NAT ["@" NAT]
//!          | [SIGN] NAT "/" NAT ["@" NAT] | [SIGN] DECIMAL
//! call    := NAME ["[" index "]"] "(" expr {"," expr} ")"
//! index   := NAT | [NAT {"," NAT}] ":" NAT        (the second form for OP)
//! ```
//!
//! A bare natural is a plain number; `k@n` is `k̂ⁿ` by coordinate; an
//! explicit sign makes an integer class; a fraction is a rational class;
//! a decimal point or exponent makes a real. `k@p` is coordinate `k` on the
//! path named by the enclosing `OP`.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{ToPrimitive, Zero};
use serde_json::json;

use crate::embedding::{embed_int, embed_nat, embed_rat, exp_omega, ln_omega, power_tower, TowerOutcome};
use crate::error::{Error, Result};
use crate::fields::LeveledRat;
use crate::integers::LeveledInt;
use crate::kernel::{exp_base, hyper, log_base, require_base, Budget, Natural};
use crate::leveled::{f_op, LeveledNat};
use crate::paths::{exp_path, hyper_path, succ_path, PathIndex, PathNat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Name {
    H,
    F,
    Op,
    E,
    L,
    S,
    Neg,
    Inv,
    Abs,
    Dist,
    Embed,
    Tower,
}

impl Name {
    const ALL: [(Name, &'static str); 12] = [
        (Name::H, "H"),
        (Name::F, "F"),
        (Name::Op, "OP"),
        (Name::E, "E"),
        (Name::L, "L"),
        (Name::S, "S"),
        (Name::Neg, "NEG"),
        (Name::Inv, "INV"),
        (Name::Abs, "ABS"),
        (Name::Dist, "DIST"),
        (Name::Embed, "EMBED"),
        (Name::Tower, "TOWER"),
    ];

    fn parse(s: &str) -> Option<Name> {
        Self::ALL.iter().find(|(_, t)| *t == s).map(|(n, _)| *n)
    }

    fn as_str(self) -> &'static str {
        Self::ALL.iter().find(|(n, _)| *n == self).expect("listed").1
    }

    fn arity(self) -> usize {
        match self {
            Name::H | Name::F | Name::Op | Name::Dist => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Index {
    Level(u32),
    Path { steps: Vec<u32>, m: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Kind {
    Natural(Natural),
    Leveled { coord: Natural, level: u32 },
    OnPath(Natural),
    Int { value: BigInt, level: Option<u32> },
    Rat { num: BigInt, den: Natural, level: Option<u32> },
    Real(f64),
    Call { name: Name, index: Option<Index>, args: Vec<Expr> },
}

/// A syntax node with the byte offset it starts at. Equality ignores offsets.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: Kind,
    pub offset: usize,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { src, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(format!("unexpected {:?}", p.rest_char())));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn rest_char(&self) -> char {
        self.src[self.pos..].chars().next().unwrap_or('\0')
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else if self.at_end() {
            Err(self.error(format!("expected '{}' but input ended", c as char)))
        } else {
            Err(self.error(format!("expected '{}', found {:?}", c as char, self.rest_char())))
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(if self.at_end() {
                self.error("expected a number but input ended")
            } else {
                self.error(format!("expected a number, found {:?}", self.rest_char()))
            });
        }
        Ok(&self.src[start..self.pos])
    }

    fn natural(&mut self) -> Result<Natural> {
        Ok(self.digits()?.parse().expect("ascii digits"))
    }

    fn small(&mut self) -> Result<u32> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| {
            self.pos = start;
            self.error(format!("{d} is too large here"))
        })
    }

    fn level_suffix(&mut self) -> Result<Option<u32>> {
        if self.peek() == Some(b'@') {
            self.pos += 1;
            Ok(Some(self.small()?))
        } else {
            Ok(None)
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        self.skip_ws();
        let offset = self.pos;
        let kind = match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'+' || c == b'-' => self.literal()?,
            Some(c) if c.is_ascii_alphabetic() => self.call()?,
            None => return Err(self.error("expected an expression but input ended")),
            Some(_) => return Err(self.error(format!("unexpected {:?}", self.rest_char()))),
        };
        Ok(Expr { kind, offset })
    }

    fn literal(&mut self) -> Result<Kind> {
        let start = self.pos;
        let sign = match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(Sign::Plus)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(Sign::Minus)
            }
            _ => None,
        };
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error("expected digits after sign"));
        }
        let digits = self.digits()?;
        if matches!(self.peek(), Some(b'.' | b'e' | b'E')) {
            return self.real(start);
        }
        let magnitude: Natural = digits.parse().expect("ascii digits");
        let signed = |m: Natural| match sign {
            Some(Sign::Minus) => -BigInt::from(m),
            _ => BigInt::from(m),
        };
        if self.peek() == Some(b'/') {
            self.pos += 1;
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.error("expected a denominator"));
            }
            let den = self.natural()?;
            let level = self.level_suffix()?;
            return Ok(Kind::Rat {
                num: signed(magnitude),
                den,
                level,
            });
        }
        if sign.is_none() && self.src[self.pos..].starts_with("@p") {
            self.pos += 2;
            return Ok(Kind::OnPath(magnitude));
        }
        let level = self.level_suffix()?;
        Ok(match (sign, level) {
            (None, None) => Kind::Natural(magnitude),
            (None, Some(level)) => Kind::Leveled {
                coord: magnitude,
                level,
            },
            (Some(_), level) => Kind::Int {
                value: signed(magnitude),
                level,
            },
        })
    }

    fn real(&mut self, start: usize) -> Result<Kind> {
        if self.peek() == Some(b'.') {
            self.pos += 1;
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.error("expected digits after decimal point"));
            }
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        if matches!(self.peek(), Some(b'e' | b'E')) {
            self.pos += 1;
            if matches!(self.peek(), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.error("expected exponent digits"));
            }
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        let text = &self.src[start..self.pos];
        let x: f64 = text.parse().map_err(|_| self.error(format!("bad real {text}")))?;
        if !x.is_finite() {
            return Err(self.error(format!("real {text} is out of range")));
        }
        Ok(Kind::Real(x))
    }

    fn call(&mut self) -> Result<Kind> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let word = &self.src[start..self.pos];
        let Some(name) = Name::parse(word) else {
            self.pos = start;
            return Err(self.error(format!("unknown function {word}")));
        };
        let index = if self.eat(b'[') {
            let index = match name {
                Name::H | Name::F => Index::Level(self.small()?),
                Name::Op => self.path_index()?,
                _ => return Err(self.error(format!("{word} takes no index"))),
            };
            self.expect(b']')?;
            Some(index)
        } else {
            if matches!(name, Name::H | Name::F | Name::Op) {
                return Err(self.error(format!("{word} needs an index in brackets")));
            }
            None
        };
        self.expect(b'(')?;
        let mut args = vec![self.expr()?];
        while self.eat(b',') {
            args.push(self.expr()?);
        }
        self.expect(b')')?;
        if args.len() != name.arity() {
            return Err(self.error(format!(
                "{word} takes {} argument(s), got {}",
                name.arity(),
                args.len()
            )));
        }
        Ok(Kind::Call { name, index, args })
    }

    fn path_index(&mut self) -> Result<Index> {
        let mut steps = Vec::new();
        self.skip_ws();
        if self.peek() != Some(b':') {
            steps.push(self.small()?);
            while self.eat(b',') {
                steps.push(self.small()?);
            }
        }
        self.expect(b':')?;
        let m = self.small()?;
        Ok(Index::Path { steps, m })
    }
}

/// Canonical source text; `parse(render(e)) == e`.
pub fn render(e: &Expr) -> String {
    e.to_string()
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = |f: &mut fmt::Formatter<'_>, l: &Option<u32>| match l {
            Some(l) => write!(f, "@{l}"),
            None => Ok(()),
        };
        match &self.kind {
            Kind::Natural(n) => write!(f, "{n}"),
            Kind::Leveled { coord, level } => write!(f, "{coord}@{level}"),
            Kind::OnPath(c) => write!(f, "{c}@p"),
            Kind::Int { value, level: l } => {
                if value.sign() == Sign::Minus {
                    write!(f, "{value}")?;
                } else {
                    write!(f, "+{value}")?;
                }
                level(f, l)
            }
            Kind::Rat { num, den, level: l } => {
                write!(f, "{num}/{den}")?;
                level(f, l)
            }
            Kind::Real(x) => write!(f, "{x:?}"),
            Kind::Call { name, index, args } => {
                write!(f, "{}", name.as_str())?;
                match index {
                    Some(Index::Level(m)) => write!(f, "[{m}]")?,
                    Some(Index::Path { steps, m }) => {
                        let s: Vec<String> = steps.iter().map(u32::to_string).collect();
                        write!(f, "[{}:{m}]", s.join(","))?
                    }
                    None => {}
                }
                write!(f, "(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Natural(Natural),
    Nat(LeveledNat),
    Int(LeveledInt),
    Rat(LeveledRat),
    Path(PathNat),
    Real(f64),
    Tower(TowerOutcome),
}

#[derive(Debug, Clone)]
pub struct Config {
    pub base: Natural,
    pub budget: Budget,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            base: Natural::from(2u32),
            budget: Budget::default(),
        }
    }
}

fn type_error(e: &Expr, message: impl Into<String>) -> Error {
    Error::Type {
        offset: e.offset,
        message: message.into(),
    }
}

impl Value {
    fn describe(&self) -> &'static str {
        match self {
            Value::Natural(_) => "natural",
            Value::Nat(_) => "leveled natural",
            Value::Int(_) => "integer",
            Value::Rat(_) => "rational",
            Value::Path(_) => "path element",
            Value::Real(_) => "real",
            Value::Tower(_) => "tower outcome",
        }
    }

    fn rank(&self) -> Option<u8> {
        match self {
            Value::Natural(_) | Value::Nat(_) => Some(0),
            Value::Int(_) => Some(1),
            Value::Rat(_) => Some(2),
            _ => None,
        }
    }

    fn leveled(&self, base: &Natural) -> Option<LeveledNat> {
        match self {
            Value::Natural(n) => LeveledNat::new(0, n.clone(), base.clone()).ok(),
            Value::Nat(a) => Some(a.clone()),
            _ => None,
        }
    }

    fn int(&self, base: &Natural) -> Option<LeveledInt> {
        match self {
            Value::Int(z) => Some(z.clone()),
            _ => self.leveled(base).map(|a| LeveledInt::from_nat(&a)),
        }
    }

    fn rat(&self, base: &Natural) -> Option<LeveledRat> {
        match self {
            Value::Rat(q) => Some(q.clone()),
            _ => self.int(base).map(|z| LeveledRat::from_int(&z)),
        }
    }

    /// Human-readable form; leveled naturals also show their value when it
    /// fits in the budget.
    pub fn display(&self, budget: &Budget) -> String {
        match self {
            Value::Natural(n) => n.to_string(),
            Value::Nat(a) if a.level() == 0 => a.to_string(),
            Value::Nat(a) => match a.materialize(budget) {
                Ok(v) => format!("{a} (= {v})"),
                Err(_) => a.to_string(),
            },
            Value::Int(z) => z.to_string(),
            Value::Rat(q) => q.to_string(),
            Value::Path(p) => {
                let head = format!("{}@{}", p.coord(), p.path());
                match p.materialize(budget) {
                    Ok(v) if !p.path().steps().is_empty() => format!("{head} (= {v})"),
                    _ => head,
                }
            }
            Value::Real(x) => format!("{x:?}"),
            Value::Tower(TowerOutcome::Converged(x)) => format!("{x:?}"),
            Value::Tower(TowerOutcome::Diverged { iterations, .. }) => {
                format!("diverged after {iterations} iterations")
            }
        }
    }

    pub fn to_json(&self, budget: &Budget) -> serde_json::Value {
        let materialized = |r: Result<Natural>| r.ok().map(|v| v.to_string());
        match self {
            Value::Natural(n) => json!({"type": "natural", "value": n.to_string()}),
            Value::Nat(a) => json!({
                "type": "leveled",
                "level": a.level(),
                "coord": a.coord().to_string(),
                "base": a.base().to_string(),
                "value": materialized(a.materialize(budget)),
            }),
            Value::Int(z) => json!({
                "type": "integer",
                "level": z.level(),
                "coord": z.coord().to_string(),
                "base": z.base().to_string(),
            }),
            Value::Rat(q) => json!({
                "type": "rational",
                "level": q.level(),
                "num": q.num().to_string(),
                "den": q.den().to_string(),
                "base": q.base().to_string(),
            }),
            Value::Path(p) => json!({
                "type": "path",
                "steps": p.path().steps(),
                "coord": p.coord().to_string(),
                "value": materialized(p.materialize(budget)),
            }),
            Value::Real(x) => json!({"type": "real", "value": x}),
            Value::Tower(TowerOutcome::Converged(x)) => {
                json!({"type": "tower", "converged": true, "value": x})
            }
            Value::Tower(TowerOutcome::Diverged { last, iterations }) => json!({
                "type": "tower",
                "converged": false,
                "iterations": iterations,
                "last": if last.is_finite() { json!(last) } else { json!(null) },
            }),
        }
    }
}

pub fn eval(e: &Expr, config: &Config) -> Result<Value> {
    require_base(&config.base)?;
    Evaluator { config, path: None }.eval(e)
}

/// Parses and evaluates in one step.
pub fn eval_str(src: &str, config: &Config) -> Result<Value> {
    eval(&parse(src)?, config)
}

struct Evaluator<'c> {
    config: &'c Config,
    path: Option<PathIndex>,
}

impl Evaluator<'_> {
    fn base(&self) -> &Natural {
        &self.config.base
    }

    fn eval(&self, e: &Expr) -> Result<Value> {
        let base = self.base().clone();
        Ok(match &e.kind {
            Kind::Natural(n) => Value::Natural(n.clone()),
            Kind::Leveled { coord, level } => Value::Nat(LeveledNat::new(*level, coord.clone(), base)?),
            Kind::OnPath(c) => match &self.path {
                Some(p) => Value::Path(p.element(c.clone())),
                None => return Err(type_error(e, "k@p is only meaningful inside OP")),
            },
            Kind::Int { value, level } => {
                Value::Int(LeveledInt::new(level.unwrap_or(0), value.clone(), base)?)
            }
            Kind::Rat { num, den, level } => Value::Rat(LeveledRat::new(
                level.unwrap_or(0),
                num.clone(),
                BigInt::from(den.clone()),
                base,
            )?),
            Kind::Real(x) => Value::Real(*x),
            Kind::Call { name, index, args } => self.call(e, *name, index.as_ref(), args)?,
        })
    }

    fn call(&self, e: &Expr, name: Name, index: Option<&Index>, args: &[Expr]) -> Result<Value> {
        let budget = &self.config.budget;
        if name == Name::Op {
            let Some(Index::Path { steps, m }) = index else {
                return Err(type_error(e, "OP needs a path index"));
            };
            let inner = Evaluator {
                config: self.config,
                path: Some(PathIndex::with_steps(self.base().clone(), steps)?),
            };
            let a = inner.path_arg(&args[0])?;
            let b = inner.path_arg(&args[1])?;
            return Ok(Value::Path(hyper_path(*m, &a, &b, budget)?));
        }
        let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>>>()?;
        let base = self.base();
        let mismatch = |v: &Value| type_error(e, format!("{} does not apply to a {}", name.as_str(), v.describe()));
        match name {
            Name::H => {
                let Some(Index::Level(m)) = index else { unreachable!("checked by parser") };
                let plain = |v: &Value| match v {
                    Value::Natural(n) => Ok(n.clone()),
                    Value::Nat(a) if a.level() == 0 => Ok(a.coord().clone()),
                    other => Err(mismatch(other)),
                };
                Ok(Value::Natural(hyper(*m, &plain(&vals[0])?, &plain(&vals[1])?, budget)?))
            }
            Name::F => {
                let Some(Index::Level(m)) = index else { unreachable!("checked by parser") };
                let rank = match (vals[0].rank(), vals[1].rank()) {
                    (Some(x), Some(y)) => x.max(y),
                    _ => return Err(mismatch(if vals[0].rank().is_none() { &vals[0] } else { &vals[1] })),
                };
                match rank {
                    0 => {
                        let a = vals[0].leveled(base).expect("rank 0");
                        let b = vals[1].leveled(base).expect("rank 0");
                        Ok(Value::Nat(f_op(*m, &a, &b)?))
                    }
                    1 => {
                        let a = vals[0].int(base).expect("rank 1");
                        let b = vals[1].int(base).expect("rank 1");
                        let (add, mul) = (a.level() == *m, a.level() + 1 == *m);
                        if add {
                            Ok(Value::Int(a.z_add(&b)?))
                        } else if mul {
                            Ok(Value::Int(a.z_mul(&b)?))
                        } else {
                            Err(Error::level(a.level(), *m))
                        }
                    }
                    _ => {
                        let a = vals[0].rat(base).expect("rank 2");
                        let b = vals[1].rat(base).expect("rank 2");
                        if a.level() == *m {
                            Ok(Value::Rat(a.q_add(&b)?))
                        } else if a.level() + 1 == *m {
                            Ok(Value::Rat(a.q_mul(&b)?))
                        } else {
                            Err(Error::level(a.level(), *m))
                        }
                    }
                }
            }
            Name::E => match &vals[0] {
                Value::Natural(n) => Ok(Value::Natural(exp_base(n, base, budget)?)),
                Value::Nat(a) => Ok(Value::Nat(a.exp())),
                Value::Int(z) => Ok(Value::Int(z.z_exp())),
                Value::Rat(q) => Ok(Value::Rat(q.q_exp())),
                Value::Path(p) => Ok(Value::Path(exp_path(p, budget)?)),
                Value::Real(x) => Ok(Value::Real(exp_omega(*x, self.omega()?)?)),
                other => Err(mismatch(other)),
            },
            Name::L => match &vals[0] {
                Value::Natural(n) => Ok(Value::Natural(log_base(n, base)?)),
                Value::Nat(a) => Ok(Value::Nat(a.log()?)),
                Value::Int(z) => Ok(Value::Int(z.z_log()?)),
                Value::Rat(q) => Ok(Value::Rat(q.q_log()?)),
                Value::Real(x) => Ok(Value::Real(ln_omega(*x, self.omega()?)?)),
                other => Err(mismatch(other)),
            },
            Name::S => match &vals[0] {
                Value::Natural(n) => Ok(Value::Natural(n + 1u32)),
                Value::Nat(a) => Ok(Value::Nat(a.successor())),
                Value::Path(p) => Ok(Value::Path(succ_path(p))),
                other => Err(mismatch(other)),
            },
            Name::Neg => match &vals[0] {
                Value::Rat(q) => Ok(Value::Rat(q.q_neg())),
                v => v.int(base).map(|z| Value::Int(z.z_neg())).ok_or_else(|| mismatch(v)),
            },
            Name::Inv => {
                let v = &vals[0];
                let q = v.rat(base).ok_or_else(|| mismatch(v))?;
                Ok(Value::Rat(q.q_inv()?))
            }
            Name::Abs => match &vals[0] {
                Value::Rat(q) => Ok(Value::Rat(q.q_abs())),
                v => v.int(base).map(|z| Value::Int(z.z_abs())).ok_or_else(|| mismatch(v)),
            },
            Name::Dist => {
                let a = vals[0].rat(base).ok_or_else(|| mismatch(&vals[0]))?;
                let b = vals[1].rat(base).ok_or_else(|| mismatch(&vals[1]))?;
                Ok(Value::Rat(a.q_dist(&b)?))
            }
            Name::Embed => match &vals[0] {
                Value::Natural(_) | Value::Nat(_) => {
                    Ok(Value::Real(embed_nat(&vals[0].leveled(base).expect("natural"))?))
                }
                Value::Int(z) => Ok(Value::Real(embed_int(z)?)),
                Value::Rat(q) => Ok(Value::Real(embed_rat(q)?)),
                other => Err(mismatch(other)),
            },
            Name::Tower => {
                let x = match &vals[0] {
                    Value::Real(x) => *x,
                    Value::Natural(n) => n.to_f64().unwrap_or(f64::INFINITY),
                    Value::Rat(q) => q.value().to_f64().unwrap_or(f64::NAN),
                    other => return Err(mismatch(other)),
                };
                Ok(Value::Tower(power_tower(x, 1e-12, 100_000)?))
            }
            Name::Op => unreachable!("handled above"),
        }
    }

    fn omega(&self) -> Result<f64> {
        self.base()
            .to_f64()
            .filter(|w| w.is_finite())
            .ok_or_else(|| Error::Overflow(format!("base {}", self.base())))
    }

    fn path_arg(&self, e: &Expr) -> Result<PathNat> {
        match self.eval(e)? {
            Value::Path(p) => Ok(p),
            other => Err(type_error(
                e,
                format!("OP arguments must be k@p path elements, not a {}", other.describe()),
            )),
        }
    }
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Natural(n) => n.is_zero(),
            Value::Nat(a) => a.coord().is_zero(),
            Value::Int(z) => z.is_zero(),
            Value::Rat(q) => q.is_zero(),
            Value::Path(p) => p.coord().is_zero(),
            Value::Real(x) => *x == 0.0,
            Value::Tower(_) => false,
        }
    }
}
