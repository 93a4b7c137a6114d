from dataclasses import dataclass

from arith.exceptions import DomainError
from arith.linalg import inner, mat_vec
from arith.scalars import GaussianRational, ONE, ZERO


def orthogonal(vector):
    """(conj b, -conj a): orthogonal to (a, b) with the same norm, and det[u v] > 0."""
    a, b = vector
    return (b.conjugate(), -a.conjugate())


@dataclass(frozen=True)
class ProjectivePoint:
    """[a : b] in P^1 over Q(i), stored with its leading nonzero coordinate equal to 1."""

    a: GaussianRational
    b: GaussianRational

    def __post_init__(self):
        a = GaussianRational.coerce(self.a)
        b = GaussianRational.coerce(self.b)
        if a.is_zero and b.is_zero:
            raise DomainError("[0 : 0] is not a point of P^1")
        if a.is_zero:
            a, b = ZERO, ONE
        else:
            a, b = ONE, b / a
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)

    @classmethod
    def from_vector(cls, vector):
        return cls(vector[0], vector[1])

    def vector(self):
        return (self.a, self.b)

    def orthogonal_vector(self):
        return orthogonal(self.vector())

    def act(self, g):
        matrix = getattr(g, 'matrix', g)
        return ProjectivePoint.from_vector(mat_vec(matrix, self.vector()))

    def to_list(self):
        return [self.a.to_strings(), self.b.to_strings()]

    def __str__(self):
        return f"[{self.a} : {self.b}]"


@dataclass(frozen=True, eq=False)
class HomomorphismData:
    """lambda(z) = z^r P_u + z^-r P_v with v spanning pi(W) and u orthogonal to it.

    u and v are kept unnormalized; v is the canonical vector of its line.
    """

    r: int
    u: tuple = None
    v: tuple = None

    def __post_init__(self):
        if self.r < 0:
            raise DomainError(f"rank {self.r} is negative")
        if self.r == 0:
            if self.u is not None or self.v is not None:
                raise DomainError("the trivial homomorphism carries no basis")
            return
        if self.v is None:
            raise DomainError(f"rank {self.r} needs a line")
        v = ProjectivePoint.from_vector(self.v).vector()
        u = orthogonal(v) if self.u is None else tuple(GaussianRational.coerce(x) for x in self.u)
        if not inner(u, v).is_zero or all(x.is_zero for x in u):
            raise DomainError("u must be a nonzero vector orthogonal to v")
        object.__setattr__(self, 'u', u)
        object.__setattr__(self, 'v', v)

    @classmethod
    def trivial(cls):
        return cls(0)

    @classmethod
    def from_line(cls, r, point):
        if r == 0:
            return cls(0)
        v = point.vector()
        return cls(r, orthogonal(v), v)

    @property
    def is_trivial(self):
        return self.r == 0

    @property
    def line(self):
        return None if self.r == 0 else ProjectivePoint.from_vector(self.v)

    def act(self, g):
        if self.r == 0:
            return self
        return HomomorphismData.from_line(self.r, self.line.act(g))

    def __eq__(self, other):
        if not isinstance(other, HomomorphismData):
            return NotImplemented
        return (self.r, self.line) == (other.r, other.line)

    def __hash__(self):
        return hash((self.r, self.line))

    def __repr__(self):
        return f"HomomorphismData(r={self.r}, line={self.line})"
