# conekit/__main__.py
from conekit.cli.main import cli

if __name__ == "__main__":
    cli()
