# %% [markdown]
# # Running studies from the command line
#
# Every study is also a `fracwave` subcommand that writes a CSV table.
# `main` takes the same argument list as the shell entry point, so the
# studies can be driven from Python as well.

# %%
import json
import pathlib
import tempfile

from fracwave.cli import main
from fracwave.tables import parse_table

# %%
main(["epsilon-sweep", "--s", "0.5", "--n-values", "10,100,1000"])

# %% [markdown]
# A JSON config holds the defaults; flags given on the command line win.

# %%
with tempfile.TemporaryDirectory() as d:
    conf = pathlib.Path(d) / "run.json"
    conf.write_text(json.dumps({"s": [0.25, 0.75], "mu": [0.0, 0.02], "a2": 5.0, "a3": 1.0}))
    out = pathlib.Path(d) / "verify.csv"
    code = main(["verify-pde", "--config", str(conf), "--workers", "2", "--out", str(out)])
    table = parse_table(out.read_text())

print("exit code", code)
for row in table.rows:
    print(dict(zip(table.columns, row)))
