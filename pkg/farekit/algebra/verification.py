from farekit.schemas.biquandle import FiniteBiquandle, AxiomReport, AxiomViolation, InverseMaps
from farekit.schemas.exceptions import InvalidBiquandleError


def verify(biquandle: FiniteBiquandle) -> AxiomReport:
    """
    Checks the biquandle axioms exhaustively and collects every violated instance.

    :param biquandle: operation tables to check
    :return: report, valid iff no violation was found
    """
    violations = []
    violations += _check_idempotence(biquandle)
    violations += _check_invertibility(biquandle)
    violations += _check_exchange_laws(biquandle)
    return AxiomReport(tuple(violations))


def _check_idempotence(b: FiniteBiquandle) -> list[AxiomViolation]:
    return [AxiomViolation('i', (x,)) for x in b.elements if b.under(x, x) != b.over(x, x)]


def _check_invertibility(b: FiniteBiquandle) -> list[AxiomViolation]:
    violations = []
    for y in b.elements:
        alpha_image = {b.over(x, y) for x in b.elements}
        beta_image = {b.under(x, y) for x in b.elements}
        # the witness is a column whose image misses elements
        if len(alpha_image) != b.size:
            violations.append(AxiomViolation('ii-alpha', (y,)))
        if len(beta_image) != b.size:
            violations.append(AxiomViolation('ii-beta', (y,)))

    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for pair in b.pairs():
        image = b.switch(*pair)
        if image in seen:
            violations.append(AxiomViolation('ii-S', seen[image] + pair))
        else:
            seen[image] = pair
    return violations


def _check_exchange_laws(b: FiniteBiquandle) -> list[AxiomViolation]:
    u, o = b.under, b.over
    violations = []
    for x in b.elements:
        for y in b.elements:
            for z in b.elements:
                if u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)):
                    violations.append(AxiomViolation('iii-1', (x, y, z)))
                if o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)):
                    violations.append(AxiomViolation('iii-2', (x, y, z)))
                if o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)):
                    violations.append(AxiomViolation('iii-3', (x, y, z)))
    return violations


def is_quandle(biquandle: FiniteBiquandle) -> bool:
    return all(biquandle.over(x, y) == x for x, y in biquandle.pairs())


def inverse_maps(biquandle: FiniteBiquandle) -> InverseMaps:
    """
    Inverts the column maps β_y, α_y and the switch S.

    :param biquandle: a biquandle, at least its axiom (ii) must hold
    :return: inverse tables
    """
    n = biquandle.size
    inv_beta = [[0] * n for _ in range(n)]
    inv_alpha = [[0] * n for _ in range(n)]
    for y in biquandle.elements:
        for x in biquandle.elements:
            inv_beta[y - 1][biquandle.under(x, y) - 1] = x
            inv_alpha[y - 1][biquandle.over(x, y) - 1] = x
    if any(0 in row for row in inv_beta + inv_alpha):
        raise InvalidBiquandleError('Column maps of the biquandle are not permutations')

    inv_switch = {biquandle.switch(*pair): pair for pair in biquandle.pairs()}
    if len(inv_switch) != n * n:
        raise InvalidBiquandleError('The switch map S of the biquandle is not a bijection')
    return InverseMaps(tuple(map(tuple, inv_beta)), tuple(map(tuple, inv_alpha)), inv_switch)
