"""Exception types shared across the toolkit."""


class ToriclassError(Exception):
    pass


class NotPrimePower(ToriclassError):
    pass


class ZeroAreaDegenerate(ToriclassError):
    pass


class NotPositiveDimensional(ToriclassError):
    pass


class NotPolygon(ToriclassError):
    pass


class DoesNotFit(ToriclassError):
    """Polygon too wide for the field; carries the smallest workable q."""

    def __init__(self, q_min):
        super().__init__(f"polygon does not fit in the torus box; needs q >= {q_min}")
        self.q_min = q_min


class TooLarge(ToriclassError):
    """Enumeration refused: estimated cost exceeds the budget."""

    def __init__(self, cost, budget):
        super().__init__(f"enumeration cost {cost} exceeds budget {budget}")
        self.cost = cost
        self.budget = budget


class ThresholdNotMet(ToriclassError):
    """q below the applicable lower-bound threshold; carries the threshold."""

    def __init__(self, threshold):
        super().__init__(f"q below bound threshold {threshold}")
        self.threshold = threshold


class NotOnTorus(ToriclassError):
    pass


class ZeroPolynomial(ToriclassError):
    pass


class InvalidParams(ToriclassError):
    pass


class Incomparable(ToriclassError):
    pass


class NotInCatalog(ToriclassError):
    pass
