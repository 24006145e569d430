"""Entry point when running as module: python -m arrayldpc"""

from arrayldpc.cli.main import app

if __name__ == "__main__":
    app()
