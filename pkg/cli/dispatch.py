"""
Entry point that accepts the hyphenated subcommand names.

``run(["check-loop", "lambda1.json"])`` runs the ``check_loop`` management
command and returns its exit code: 0 on success, 1 on a domain or validation
error, 2 on a usage error.
"""

import os
import sys
from importlib import import_module

import django

SUBCOMMANDS = (
    'check-loop', 'act', 'index', 'winding', 'alpha', 'beta', 'roundtrip', 'rank',
    'level', 'pi', 'thom', 'thom-inverse', 'section', 'phi', 'phi-inv', 'homotopy',
    'ktheory', 'gen-corpus', 'oracle-index',
)


def run(argv, stdout=None, stderr=None):
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'loopgrass.settings')
    django.setup()
    stderr = stderr or sys.stderr
    if not argv:
        stderr.write(f"usage: loopgrass <subcommand> ...; one of {', '.join(SUBCOMMANDS)}\n")
        return 2
    name = argv[0]
    if name not in SUBCOMMANDS:
        stderr.write(f"unknown subcommand {name!r}; expected one of {', '.join(SUBCOMMANDS)}\n")
        return 2
    module = import_module(f"cli.management.commands.{name.replace('-', '_')}")
    command = module.Command(stdout=stdout, stderr=stderr)
    try:
        command.run_from_argv(['loopgrass', name.replace('-', '_'), *argv[1:]])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def main():
    sys.exit(run(sys.argv[1:]))
