from strongchordal.cli import cli  # Import the existing 'cli' group

if __name__ == "__main__":
    cli()
