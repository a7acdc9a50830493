"""Walkthrough: formulas, clausal forms, and the contrast/likeness predicates.

The running pair throughout these demos: phi holds exactly when two of
{p, q, r} are true, psi exactly when one is.  "Why phi and not psi?"
"""

from contrastix import (
    Vocabulary,
    parse_formula,
    size,
    to_cnf,
    cnf_size,
    entails,
    equivalent,
    is_weak_contrast,
    is_strong_contrast,
    is_likeness,
)

vocab = Vocabulary()

exactly_two = parse_formula("(p & q & !r) | (p & !q & r) | (!p & q & r)", vocab)
exactly_one = parse_formula("(p & !q & !r) | (!p & q & !r) | (!p & !q & r)", vocab)

print("phi  =", exactly_two)
print("psi  =", exactly_one)
print("size(phi) =", size(exactly_two), " (proposition-symbol occurrences)")

print("\nCNF conversion keeps the meaning:")
cnf = to_cnf(parse_formula("p | (q & r)", vocab))
print("  p | (q & r)  ->", cnf, " (cnf size", cnf_size(cnf), ")")

print("\nEntailment over formula sets:")
s = [parse_formula(t, vocab) for t in ("p", "q", "!r")]
print("  {p, q, !r} |= phi & !psi :", entails(s, exactly_two & ~exactly_one))
print("  {q & (p & !r)} == {p, q, !r} :", equivalent([parse_formula("q & (p & !r)", vocab)], s))

print("\nContrasts and likenesses between phi and psi:")
for text in ("p | r", "p | q | r", "p"):
    t = parse_formula(text, vocab)
    print(
        f"  {text:10}  weak contrast: {is_weak_contrast(t, exactly_two, exactly_one)!s:5}"
        f"  strong: {is_strong_contrast(t, exactly_two, exactly_one)!s:5}"
        f"  likeness: {is_likeness(t, exactly_two, exactly_one)}"
    )
