from django.utils.translation import gettext_lazy as _

FORMAT_TABLE = "table"
FORMAT_CSV = "csv"

OUTPUT_FORMATS = (
    (FORMAT_TABLE, _("Aligned text columns")),
    (FORMAT_CSV, _("Comma separated values")),
)

STATE_X = "X"
STATE_DELTA = "delta"
STATE_GF = "gf"

STATE_KINDS = (
    (STATE_X, _("Coherent state X_I or a combination of them")),
    (STATE_DELTA, _("Delta state at a p-adic point")),
    (STATE_GF, _("Disk coefficients read from a file")),
)

GRAM_FOCK = "fock"
GRAM_L2 = "l2"
GRAM_DIFFERENCE = "difference"

GRAM_MATRICES = (
    (GRAM_FOCK, _("Renormalized pairing of the Fock vectors")),
    (GRAM_L2, _("L2 product of the images under phi")),
    (GRAM_DIFFERENCE, _("Entrywise difference")),
)

CONVERGENCE_COLUMNS = ("eps", "lambda", "prelimit", "exact", "abs_error")
