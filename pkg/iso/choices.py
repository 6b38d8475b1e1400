from django.utils.translation import gettext_lazy as _

CCR = "ccr"
CASCADE = "cascade"
XRELAT = "xrelat"
LEMMA2 = "lemma2"
COROLLARY4 = "corollary4"
EXAMPLE6 = "example6"
LEMMA7 = "lemma7"
LEMMA10 = "lemma10"
INTERTWINE = "intertwine"
THRESHOLD = "threshold"
EIGEN = "eigen"
LEMMA3 = "lemma3"
LEMMA5 = "lemma5"
ALL = "all"

SUITES = (
    (CCR, _("Canonical relations of creation and annihilation")),
    (CASCADE, _("Cascade relation of coherent state coefficients")),
    (XRELAT, _("Refinement of X states and of disk indicators")),
    (LEMMA2, _("Renormalized pairing reads cascade coefficients")),
    (COROLLARY4, _("Renormalized pairing equals the disk integral")),
    (EXAMPLE6, _("Delta state maps onto the delta function")),
    (LEMMA7, _("Every cascade family is a coherent state")),
    (LEMMA10, _("X combinations induce cascade families")),
    (INTERTWINE, _("Pairings commute with the maps phi and phi prime")),
    (THRESHOLD, _("Norm divergence at the threshold")),
    (EIGEN, _("Coherent states are eigenvectors of the annihilator")),
    (LEMMA3, _("phi is a levelwise isometric bijection")),
    (LEMMA5, _("Norm of a generalized function on level k")),
    (ALL, _("Every suite")),
)

SUITE_NAMES = [name for name, label in SUITES]

PASS = "PASS"
FAIL = "FAIL"
