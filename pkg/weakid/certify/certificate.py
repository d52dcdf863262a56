"""
Bounded-degree basis certificates and normal-form recovery from evaluations
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from ..config import CertifyConfig, Config
from ..errors import GroupSpecError
from ..groups import GroupSpec, operator_table
from ..gpoly import Evaluator, GMonomial, GPolynomial, Letter, format_polynomial
from ..rewrite import RuleSet, enumerate_B, normalize, rules_for, words_of_multidegree
from .identities import verify_conjugated, verify_identity_suite
from .linalg import EvalVector, independence_check
from .oracle import quotient_dimension_oracle

logger = logging.getLogger(__name__)

Multidegree = Tuple[int, ...]


class IdentityRecord(BaseModel):
    tag: str
    ok: bool


class MultidegreeRecord(BaseModel):
    """Counts for one multidegree: |B|, rank of the B evaluations and the brute-force dimension"""
    degree: List[int] = Field(description="Variable indices with multiplicity")
    b_count: int
    rank: int
    oracle_dim: int
    spanning_ok: bool
    witness: Optional[str] = Field(default=None, exclude=True, description="First failure found")

    @property
    def ok(self) -> bool:
        return self.spanning_ok and self.b_count == self.rank == self.oracle_dim


class Certificate(BaseModel):
    group: str
    conductor: int
    degree_bound: int
    identities: List[IdentityRecord] = Field(default_factory=list)
    multidegrees: List[MultidegreeRecord] = Field(default_factory=list)
    verdict: str = "fail"
    runtime_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def failures(self) -> List[MultidegreeRecord]:
        return [record for record in self.multidegrees if not record.ok]

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)


def compositions(total: int) -> List[Multidegree]:
    """Multisets over x1..xk using every one of x1..xk, with k <= total."""
    out: List[Multidegree] = []

    def extend(prefix: List[int], left: int) -> None:
        if left == 0:
            out.append(tuple(v for v, count in enumerate(prefix, start=1) for _ in range(count)))
            return
        for count in range(1, left + 1):
            extend(prefix + [count], left - count)

    extend([], total)
    return out


def certified_multidegrees(degree_bound: int) -> List[Multidegree]:
    return [md for total in range(1, degree_bound + 1) for md in compositions(total)]


def _rules_without(spec: GroupSpec, omitted: Sequence[str]) -> RuleSet:
    rules = rules_for(spec)
    for tag in omitted:
        rules = rules.without(tag)
    return rules


def _spanning_words(rules: RuleSet, multidegree: Multidegree, settings: CertifyConfig) -> List[GMonomial]:
    words = words_of_multidegree(rules.alphabet, multidegree)
    if len(multidegree) <= settings.raw_letter_degree:
        basis = set(rules.alphabet)
        extra = [name for name in rules.table.operator_names() if name not in basis]
        everything = list(rules.alphabet) + extra
        words += [m for m in words_of_multidegree(everything, multidegree) if any(x.op in extra for x in m)]
    return words


def check_spanning(
    spec: GroupSpec,
    multidegree: Multidegree,
    rules: RuleSet,
    config: Config,
    evaluator: Evaluator,
) -> Tuple[bool, Optional[str]]:
    """Every word of the multidegree normalizes into span(B) with its evaluation preserved."""
    conductor = spec.conductor
    for m in _spanning_words(rules, multidegree, config.certify):
        f = GPolynomial.monomial(m, conductor)
        result = normalize(
            f,
            spec,
            rules=rules,
            step_budget=config.rewrite.step_budget,
            check_steps=config.rewrite.check_steps,
            evaluator=evaluator,
        )
        residue = [
            w for w in result.monomials()
            if any(x.op not in rules.alphabet for x in w) or not rules.normal_form(w.word)
        ]
        if residue:
            return False, f"{m} normalizes to {format_polynomial(result)}; {residue[0]} is not in B"
        if evaluator(result) != evaluator.monomial(m):
            return False, f"normalizing {m} changed its evaluation"
    return True, None


def certify_multidegree(
    spec: GroupSpec,
    multidegree: Multidegree,
    config: Config,
    omitted: Sequence[str] = (),
) -> MultidegreeRecord:
    rules = _rules_without(spec, omitted)
    evaluator = Evaluator(operator_table(spec))
    basis = enumerate_B(spec, multidegree, rules)
    independence = independence_check(basis, evaluator)
    oracle_dim = quotient_dimension_oracle(spec, multidegree, budget=config.certify.oracle_budget)
    spanning_ok, witness = check_spanning(spec, multidegree, rules, config, evaluator)
    if witness is None and independence.dependent_subset:
        kernel = " + ".join(f"({c})*{m}" for m, c in independence.dependent_subset)
        witness = f"kernel vector {kernel}"
    if witness is None and not (len(basis) == independence.rank == oracle_dim):
        witness = f"|B| = {len(basis)}, rank = {independence.rank}, oracle = {oracle_dim}"
    record = MultidegreeRecord(
        degree=list(multidegree),
        b_count=len(basis),
        rank=independence.rank,
        oracle_dim=oracle_dim,
        spanning_ok=spanning_ok,
        witness=witness,
    )
    logger.debug("%s %s: %s", spec.label, multidegree, record)
    return record


def certify_basis(
    spec: GroupSpec,
    degree_bound: Optional[int] = None,
    config: Optional[Config] = None,
    rules: Optional[RuleSet] = None,
    on_record: Optional[Callable[[MultidegreeRecord], None]] = None,
) -> Certificate:
    """Spanning, independence and oracle cross-check for every multidegree up to the bound."""
    if spec.has_rotation and spec.n == 1:
        raise GroupSpecError("Zn:1 acts trivially on sl2; there is no basis of weak identities to certify")
    config = config or Config.for_group(spec)
    bound = degree_bound or config.certify.degree_bound
    start = time.perf_counter()
    full = rules_for(spec)
    omitted = [tag for tag in full.tags if rules is not None and tag not in rules.tags]

    identities = [IdentityRecord(tag=r.tag, ok=r.ok) for r in verify_identity_suite(spec)]
    if config.output.conjugations:
        runs = verify_conjugated(spec, config.output.conjugations, config.output.seed)
        for index, results in runs:
            identities += [IdentityRecord(tag=f"{r.tag}@conjugation{index}", ok=r.ok) for r in results]
    multidegrees = certified_multidegrees(bound)
    records: List[MultidegreeRecord] = []
    if config.certify.workers > 1:
        with ProcessPoolExecutor(max_workers=config.certify.workers) as pool:
            futures = [pool.submit(certify_multidegree, spec, md, config, omitted) for md in multidegrees]
            for future in futures:
                record = future.result()
                records.append(record)
                if on_record:
                    on_record(record)
    else:
        for md in multidegrees:
            record = certify_multidegree(spec, md, config, omitted)
            records.append(record)
            if on_record:
                on_record(record)

    ok = all(r.ok for r in identities) and all(r.ok for r in records)
    return Certificate(
        group=spec.label,
        conductor=spec.conductor,
        degree_bound=bound,
        identities=identities,
        multidegrees=records,
        verdict="pass" if ok else "fail",
        runtime_ms=int((time.perf_counter() - start) * 1000),
    )


def recover_normal_form(vector: EvalVector, spec: GroupSpec) -> GMonomial:
    """Rebuild the element of B (A4, S4, A5) whose evaluation is ``vector``.

    The matrix entries present fix u2; the letters of u2 carry the largest (column, variable) labels.
    """
    if not spec.is_epsilon_group:
        raise GroupSpecError(f"normal-form recovery is implemented for A4, S4, A5, not {spec.label}")
    monomials = {m for _, m in vector.coords}
    if len(monomials) != 1:
        raise ValueError("vector is not the evaluation of a single normal-form monomial")
    (monomial,) = monomials
    labels = sorted((kind + 1, index) for (kind, index), exp in monomial for _ in range(exp))
    entries = set(vector.entries())
    if entries == {1, 4}:
        rows: List[int] = []
    elif entries == {2}:
        rows = [2]
    elif entries == {3}:
        rows = [3]
    elif entries == {1}:
        rows = [2, 3]
    else:
        raise ValueError(f"entries {sorted(entries)} do not match any normal-form shape")
    if len(rows) > len(labels):
        raise ValueError("too few variables for the normal-form shape")
    split = len(labels) - len(rows)
    u1 = [Letter(f"eps1{col}", var) for col, var in labels[:split]]
    u2 = [Letter(f"eps{r}{col}", var) for r, (col, var) in zip(rows, labels[split:])]
    return GMonomial(tuple(u1 + u2))
