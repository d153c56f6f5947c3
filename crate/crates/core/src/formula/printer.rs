use super::Formula;

const IFF: u8 = 1;
const IMP: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const PREFIX: u8 = 5;

/// Renders a formula with the fewest parentheses that still parse back to
/// the same tree. `!Op!` patterns print as `hatK`, `dia` and `hatB`.
pub fn to_text(f: &Formula) -> String {
    render(f).0
}

fn render(f: &Formula) -> (String, u8) {
    use Formula::*;
    match f {
        Atom(name) => (name.clone(), PREFIX),
        Top => ("true".into(), PREFIX),
        Bot => ("false".into(), PREFIX),
        Not(inner) => match inner.as_ref() {
            Know(x) if matches!(x.as_ref(), Not(_)) => prefix("hatK", unwrap_not(x)),
            Knowable(x) if matches!(x.as_ref(), Not(_)) => prefix("dia", unwrap_not(x)),
            Believe(x) if matches!(x.as_ref(), Not(_)) => prefix("hatB", unwrap_not(x)),
            _ => {
                let (s, lvl) = render(inner);
                let s = if lvl < PREFIX { format!("({s})") } else { s };
                if starts_with_word_operator(inner) {
                    (format!("! {s}"), PREFIX)
                } else {
                    (format!("!{s}"), PREFIX)
                }
            }
        },
        Know(x) => prefix("K", x),
        Knowable(x) => prefix("box", x),
        Believe(x) => prefix("B", x),
        And(a, b) => infix(a, "&", b, AND, false),
        Or(a, b) => infix(a, "|", b, OR, false),
        Implies(a, b) => infix(a, "->", b, IMP, true),
        Iff(a, b) => infix(a, "<->", b, IFF, true),
    }
}

fn unwrap_not(f: &Formula) -> &Formula {
    match f {
        Formula::Not(x) => x,
        _ => f,
    }
}

fn starts_with_word_operator(f: &Formula) -> bool {
    use Formula::*;
    match f {
        Know(_) | Knowable(_) | Believe(_) => true,
        Not(inner) => matches!(
            inner.as_ref(),
            Know(x) | Knowable(x) | Believe(x) if matches!(x.as_ref(), Not(_))
        ),
        _ => false,
    }
}

fn prefix(op: &str, operand: &Formula) -> (String, u8) {
    let (s, lvl) = render(operand);
    if lvl < PREFIX {
        (format!("{op} ({s})"), PREFIX)
    } else {
        (format!("{op} {s}"), PREFIX)
    }
}

fn infix(a: &Formula, op: &str, b: &Formula, level: u8, right_assoc: bool) -> (String, u8) {
    let (ls, ll) = render(a);
    let (rs, rl) = render(b);
    let lparen = ll < level || (ll == level && right_assoc);
    let rparen = rl < level || (rl == level && !right_assoc);
    let wrap = |s: String, p: bool| if p { format!("({s})") } else { s };
    (
        format!("{} {op} {}", wrap(ls, lparen), wrap(rs, rparen)),
        level,
    )
}
