//! Expression language for polynomials and operators.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary | unary)*      juxtaposition multiplies
//! unary   := '-' unary | power
//! power   := primary ('^' exponent)?
//! exponent:= '-'? INT | '(' '-'? INT ')'
//! primary := INT | IDENT | FAMILY '[' INT (',' INT)* ']' | '(' expr ')'
//! ```
//!
//! A product involving an operator is composition, applied rightmost-first.

use std::fmt;

use ladderops_core::exactalg::{BigInt, BigRational, MultiPoly, RationalFunction, Var};
use ladderops_core::families::{Family, FamilyElement};
use ladderops_core::operators::{DiffOp, Operator, ShiftOp};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: expected {}, found {found}", .position + 1, .expected.join(" or "))]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{0}")]
    Invalid(String),
    #[error("family {0}: {1}")]
    Family(String, String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftSymbol {
    Tqx,
    Tqy,
    Tz,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Int(BigInt),
    /// Spatial variable or parameter.
    Var(Var),
    /// `q`, read as `u^2`.
    Q,
    Deriv(Var),
    Shift(ShiftSymbol),
    Family(Family, Vec<i64>),
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, i32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()[],".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError {
                position: i,
                expected: vec!["a number, identifier or operator".into()],
                found: format!("'{c}'"),
            });
        }
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

/// Identifier kinds, split so that implicit products like `xy` are not
/// silently accepted.
fn identifier(name: &str) -> Option<ExprAst> {
    if name == "q" {
        return Some(ExprAst::Q);
    }
    if let Some(v) = Var::from_name(name) {
        return Some(ExprAst::Var(v));
    }
    if let Some(rest) = name.strip_prefix('D') {
        return Var::from_name(rest).filter(|v| v.is_spatial()).map(ExprAst::Deriv);
    }
    match name {
        "Tqx" => Some(ExprAst::Shift(ShiftSymbol::Tqx)),
        "Tqy" => Some(ExprAst::Shift(ShiftSymbol::Tqy)),
        "Tz" => Some(ExprAst::Shift(ShiftSymbol::Tz)),
        _ => None,
    }
}

const IDENT_HINT: &str = "a variable (x y z w xi eta), parameter (a b g l t q u), Dx..Deta, Tqx, Tqy, Tz or family[...]";

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            position: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::Sym('('))
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = ExprAst::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if self.starts_primary() {
                lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        if self.eat('-') {
            Ok(ExprAst::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.primary()?;
        if self.eat('^') {
            let e = self.exponent()?;
            return Ok(ExprAst::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn small_int(&mut self, neg: bool) -> Result<i64, ParseError> {
        let at = self.pos;
        match self.bump() {
            Tok::Int(n) => {
                let n = if neg { -n } else { n };
                i64::try_from(n).map_err(|_| {
                    self.pos = at;
                    self.error(&["an integer that fits in 64 bits"])
                })
            }
            _ => {
                self.pos = at;
                Err(self.error(&["an integer"]))
            }
        }
    }

    fn exponent(&mut self) -> Result<i32, ParseError> {
        let at = self.pos;
        let paren = self.eat('(');
        let neg = self.eat('-');
        let e = self.small_int(neg)?;
        if paren {
            self.expect(')')?;
        }
        i32::try_from(e).map_err(|_| {
            self.pos = at;
            self.error(&["an exponent that fits in 32 bits"])
        })
    }

    fn primary(&mut self) -> Result<ExprAst, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(ExprAst::Int(n))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if let Some(f) = Family::from_name(&name) {
                    self.bump();
                    return self.family_args(f);
                }
                match identifier(&name) {
                    Some(e) => {
                        self.bump();
                        Ok(e)
                    }
                    None => Err(self.error(&[IDENT_HINT])),
                }
            }
            _ => Err(self.error(&["a number", "an identifier", "'('"])),
        }
    }

    fn family_args(&mut self, f: Family) -> Result<ExprAst, ParseError> {
        self.expect('[')?;
        let mut idx = Vec::new();
        loop {
            // the sign index of bc2half may be negative
            let neg = self.eat('-');
            idx.push(self.small_int(neg)?);
            if self.eat(',') {
                continue;
            }
            if *self.peek() == Tok::Sym(']') {
                self.bump();
                return Ok(ExprAst::Family(f, idx));
            }
            return Err(self.error(&["','", "']'"]));
        }
    }
}

pub fn parse_expr(text: &str) -> Result<ExprAst, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'+'", "'-'", "'*'", "'/'", "'^'", "end of input"]));
    }
    Ok(e)
}

/// Value of an expression: a function or an operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(RationalFunction),
    Op(Operator),
}

impl Value {
    fn into_operator(self) -> Operator {
        match self {
            Value::Scalar(r) => Operator::Scalar(r),
            Value::Op(o) => o,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Value::Scalar(r) => r.to_string(),
            Value::Op(o) => o.render(),
        }
    }
}

fn op_err(e: impl fmt::Display) -> EvalError {
    EvalError::Invalid(e.to_string())
}

fn combine(
    a: Value,
    b: Value,
    scalar: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction,
    op: impl Fn(&Operator, &Operator) -> Result<Operator, ladderops_core::operators::OperatorError>,
) -> Result<Value, EvalError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(scalar(&x, &y))),
        (a, b) => op(&a.into_operator(), &b.into_operator()).map(Value::Op).map_err(op_err),
    }
}

impl ExprAst {
    pub fn eval(&self) -> Result<Value, EvalError> {
        Ok(match self {
            ExprAst::Int(n) => Value::Scalar(RationalFunction::from_poly(MultiPoly::constant(
                BigRational::from_integer(n.clone()),
            ))),
            ExprAst::Var(v) => Value::Scalar(RationalFunction::from_poly(MultiPoly::var(*v))),
            ExprAst::Q => Value::Scalar(RationalFunction::from_poly(MultiPoly::var_pow(Var::U, 2))),
            ExprAst::Deriv(v) => Value::Op(Operator::Diff(DiffOp::partial(*v, 1))),
            ExprAst::Shift(s) => Value::Op(Operator::Shift(match s {
                ShiftSymbol::Tqx => ShiftOp::tqx(1),
                ShiftSymbol::Tqy => ShiftOp::tqy(1),
                ShiftSymbol::Tz => ShiftOp::tz(1),
            })),
            ExprAst::Family(f, idx) => {
                let el = FamilyElement::build(*f, idx).map_err(|e| EvalError::Family(f.name().into(), e.to_string()))?;
                Value::Scalar(el.value)
            }
            ExprAst::Neg(a) => match a.eval()? {
                Value::Scalar(r) => Value::Scalar(-&r),
                Value::Op(o) => Value::Op(o.neg()),
            },
            ExprAst::Add(a, b) => combine(a.eval()?, b.eval()?, |x, y| x + y, Operator::add)?,
            ExprAst::Sub(a, b) => combine(a.eval()?, b.eval()?, |x, y| x - y, Operator::sub)?,
            ExprAst::Mul(a, b) => combine(a.eval()?, b.eval()?, |x, y| x * y, Operator::compose)?,
            ExprAst::Div(a, b) => {
                let d = match b.eval()? {
                    Value::Scalar(d) => d,
                    Value::Op(_) => return Err(EvalError::Invalid("cannot divide by an operator".into())),
                };
                let inv = d.recip().map_err(|_| EvalError::Invalid("division by zero".into()))?;
                match a.eval()? {
                    Value::Scalar(n) => Value::Scalar(&n * &inv),
                    Value::Op(o) => Value::Op(Operator::Scalar(inv).compose(&o).map_err(op_err)?),
                }
            }
            ExprAst::Pow(a, e) => match a.eval()? {
                Value::Scalar(r) => Value::Scalar(r.pow(*e).map_err(|_| EvalError::Invalid("zero to a negative power".into()))?),
                Value::Op(o) => {
                    if *e < 0 {
                        return Err(EvalError::Invalid("operators have no negative powers".into()));
                    }
                    let mut acc = Operator::Scalar(RationalFunction::from_poly(MultiPoly::one()));
                    for _ in 0..*e {
                        acc = acc.compose(&o).map_err(op_err)?;
                    }
                    Value::Op(acc)
                }
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ladderops_core::families::Family;
    use proptest::prelude::*;

    fn scalar(text: &str) -> RationalFunction {
        match parse_expr(text).unwrap().eval().unwrap() {
            Value::Scalar(r) => r,
            Value::Op(o) => panic!("expected a function, got {}", o.render()),
        }
    }

    fn op(text: &str) -> Operator {
        match parse_expr(text).unwrap().eval().unwrap() {
            Value::Op(o) => o,
            Value::Scalar(r) => panic!("expected an operator, got {r}"),
        }
    }

    #[test]
    fn precedence() {
        assert_eq!(scalar("-x^2"), -&scalar("x*x"));
        assert_eq!(scalar("2a*x - 3/4"), scalar("(2*a*x) - (3/4)"));
        assert_eq!(scalar("1 - 2 - 3"), scalar("-4"));
        assert_eq!(scalar("8/2/2"), scalar("2"));
        assert_eq!(scalar("2l^2"), scalar("2*(l*l)"));
        assert_eq!(scalar("z^-1 * z"), scalar("1"));
        assert_eq!(scalar("x^(-2)"), scalar("1/(x*x)"));
        assert_eq!(scalar("q"), scalar("u^2"));
    }

    #[test]
    fn operators() {
        let raising = op("x^2*Dx + y^2*Dy + (g+1/2)*(x+y)");
        let f = scalar("x + y");
        assert_eq!(raising.apply(&f), scalar("x^2 + y^2 + (g+1/2)*(x+y)^2"));
        assert_eq!(op("Dx+Dy").apply(&scalar("x*y")), scalar("x + y"));
        // rightmost-first: x*Dx applied to f is x f'
        assert_eq!(op("x*Dx").apply(&scalar("x^3")), scalar("3x^3"));
        assert_eq!(op("Dx*x").apply(&scalar("x^3")), scalar("4x^3"));
        assert_eq!(op("Dx^2").apply(&scalar("x^3")), scalar("6x"));
        assert_eq!(op("Tqx").apply(&scalar("x")), scalar("q*x"));
        // Tz advances z by q^(1/2) = u
        assert_eq!(op("Tz - 1").apply(&scalar("z")), scalar("(u - 1)*z"));
    }

    #[test]
    fn mixed_classes_are_rejected() {
        assert!(parse_expr("Dx + Tqx").unwrap().eval().is_err());
        assert!(parse_expr("x / Dx").unwrap().eval().is_err());
        assert!(parse_expr("Dx^-1").unwrap().eval().is_err());
    }

    #[test]
    fn families() {
        assert_eq!(scalar("jacr[0]"), scalar("1"));
        assert_eq!(scalar("gegx[1]"), scalar("2l*x"));
        assert!(parse_expr("jackz[0,1]").unwrap().eval().is_err());
        assert!(parse_expr("bc2half[1,0,-1]").unwrap().eval().is_ok());
    }

    #[test]
    fn parse_errors() {
        let e = parse_expr("x^(1/2)").unwrap_err();
        assert_eq!(e.position, 4);
        assert_eq!(e.expected, vec!["')'"]);
        assert_eq!(e.found, "'/'");
        assert_eq!(parse_expr("x +").unwrap_err().found, "end of input");
        assert_eq!(parse_expr("xy").unwrap_err().position, 0);
        assert!(parse_expr("x^y").is_err());
        assert!(parse_expr("(x").is_err());
        assert!(parse_expr("x $ y").is_err());
        assert!(parse_expr("jacp[1").is_err());
        assert!(parse_expr("jacp").is_err());
    }

    #[test]
    fn family_renderings_round_trip() {
        let cases: [(Family, &[i64]); 10] = [
            (Family::CqUltraZ, &[3]),
            (Family::MacdonaldJ, &[3]),
            (Family::GegenbauerX, &[4]),
            (Family::GegenbauerHomog, &[3]),
            (Family::JacobiP, &[3]),
            (Family::JacobiR, &[3]),
            (Family::JacobiHomog, &[2]),
            (Family::JackZ, &[3, 1]),
            (Family::Bc2R, &[2, 1]),
            (Family::Bc2Half, &[2, 1, -1]),
        ];
        for (f, idx) in cases {
            let el = FamilyElement::build(f, idx).unwrap();
            let text = el.value.to_string();
            assert_eq!(scalar(&text), el.value, "{f} {idx:?}: {text}");
        }
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        let vars = [Var::X, Var::Y, Var::Z, Var::Xi, Var::Alpha, Var::Gamma, Var::T, Var::U];
        prop::collection::vec(
            (-9i64..=9, 1i64..=4, prop::collection::vec((0usize..vars.len(), -1i16..=3), 0..3)),
            0..5,
        )
        .prop_map(move |terms| {
            let mut p = MultiPoly::zero();
            for (c, d, vs) in terms {
                let mut m = MultiPoly::constant(BigRational::new(c.into(), d.into()));
                for (i, e) in vs {
                    let v = vars[i];
                    // only z is Laurent
                    let e = if v.is_laurent() { e } else { e.max(0) };
                    m = &m * &MultiPoly::var_pow(v, e);
                }
                p = &p + &m;
            }
            p
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(p in arb_poly(), d in arb_poly()) {
            let r = RationalFunction::from_poly(p.clone());
            prop_assert_eq!(scalar(&r.to_string()), r);
            if !d.is_zero() {
                let r = RationalFunction::new(p, d).unwrap();
                prop_assert_eq!(scalar(&r.to_string()), r);
            }
        }
    }
}
