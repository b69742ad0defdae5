"""Tour of the set algebra on a small worked example.

Two services are rated on three quality-of-service criteria (capability,
trustworthiness, price). Each rating is a triple of intervals: how much the
evidence supports the criterion, how undecided the assessors are, and how
much the evidence speaks against it. The three degrees are independent, so
conflicting and incomplete assessments are both representable.

Run:  python demos/algebra_tour.py
"""

from ins import (
    DiscreteINS,
    add,
    cartesian_product,
    complement,
    difference,
    equals,
    false_favorite,
    intersect,
    is_contained,
    nv,
    pointwise_product,
    scalar_div,
    scalar_mul,
    truth_favorite,
    union,
    universal_set,
)

service_a = DiscreteINS(
    [
        ("capability", nv(0.2, 0.4, 0.3, 0.5, 0.3, 0.5)),
        ("trust", nv(0.5, 0.7, 0.0, 0.2, 0.2, 0.3)),
        ("price", nv(0.6, 0.8, 0.2, 0.3, 0.2, 0.3)),
    ]
)
service_b = DiscreteINS(
    [
        ("capability", nv(0.5, 0.7, 0.1, 0.3, 0.1, 0.3)),
        ("trust", nv(0.2, 0.3, 0.2, 0.4, 0.5, 0.8)),
        ("price", nv(0.4, 0.6, 0.0, 0.1, 0.3, 0.4)),
    ]
)


def show(title, s):
    print(f"\n{title}")
    for label, value in s.items():
        print(f"  {str(label):18s} {value}")


show("service A", service_a)
show("service B", service_b)

# The lattice operators: union is optimistic (most truth, least doubt),
# intersection pessimistic.
show("A | B  (union)", union(service_a, service_b))
show("A & B  (intersection)", intersect(service_a, service_b))

# Complement swaps support and opposition and reflects indeterminacy.
show("~A  (complement)", complement(service_a))

# Difference: what remains of A once B's support is discounted.
show("A \\ B  (difference)", difference(service_a, service_b))

# Arithmetic-style combinations: saturating addition and the product pair
# (probabilistic sum on truth, product on the rest).
show("A + B  (addition)", add(service_a, service_b))
show("prod(A, B)  (elementwise product)", pointwise_product(service_a, service_b))

# Scalar scaling, saturating at 1.
show("scale(2, A)", scalar_mul(2, service_a))
show("div(A, 2)", scalar_div(service_a, 2))

# The favorite operators resolve indeterminacy optimistically (into truth)
# or pessimistically (into falsity).
show("tf(A)  (truth-favorite)", truth_favorite(service_a))
show("ff(A)  (false-favorite)", false_favorite(service_a))

# Containment is a partial order: these two assessments are incomparable.
print("\nA contained in B?", is_contained(service_a, service_b))
print("B contained in A?", is_contained(service_b, service_a))
print("A & B contained in A?", is_contained(intersect(service_a, service_b), service_a))

# Unlike classical sets, A | ~A does not recover the universal set: doubt
# does not cancel.
lhs = union(service_a, complement(service_a))
print("\nA | ~A equals the universal set?",
      equals(lhs, universal_set(service_a.universe)))
show("A | ~A", lhs)

# A product over two different universes pairs up every combination.
over_two = cartesian_product(
    DiscreteINS([("fast", nv(0.7, 0.9, 0.1, 0.2, 0.0, 0.1))]),
    service_b,
)
show("cart(speed-rating, B)", over_two)
