# Saving pencils as JSON documents and transforming them from the command line

import subprocess
import sys
import tempfile
from pathlib import Path

from pencilforge import PencilDocument, compile_expression, realize
from pencilforge.document import from_json, to_json

# A document stores every scalar as a normalized rational string.

f, variables = compile_expression("(1 + z1)/(2 - z2)")
R = realize(f)
doc = PencilDocument.from_realization(R, variables)
text = to_json(doc)
print(text[:300])

# Reading and writing again gives the same bytes.

print(to_json(from_json(text)) == text)

# The same workflow through the CLI.

tmp = Path(tempfile.mkdtemp())
out = tmp / "q.pencil.json"


def cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "pencilforge", *argv], capture_output=True, text=True)
    print(f"$ pencilforge {' '.join(argv)}  -> exit {proc.returncode}")
    for line in (proc.stdout + proc.stderr).splitlines():
        print("   ", line)


cli("realize", "-e", "(1 + z1)/(2 - z2)", "-o", str(out))
cli("verify", str(out), "-e", "(1 + z1)/(2 - z2)")
cli("eval", str(out), "--point", "3,1")
cli("transform", str(out), "add", "--other", str(out), "-o", str(tmp / "twice.json"))
cli("verify", str(tmp / "twice.json"), "-e", "2*(1 + z1)/(2 - z2)")
