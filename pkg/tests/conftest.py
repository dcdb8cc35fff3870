import os

# Share one KL cache across the whole suite (and with the CLI) so the n=6
# table is computed at most once per checkout.
os.environ.setdefault(
    "RSKCELLS_CACHE",
    os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), ".cache"),
)
