# noxfile.py
import nox


@nox.session(venv_backend='venv',
             reuse_venv=True)
def tests(session):
    session.install("-r", "requirements/build.txt", "pytest")
    session.install("-e", ".")
    session.run("pytest", "--junit-xml=test_report.xml", *session.posargs)


@nox.session(venv_backend='venv',
             reuse_venv=True)
def lint(session):
    session.install("ruff", "isort")
    session.run("ruff", "check", "jaxkin", "tests")
    session.run("isort", "--check-only", "jaxkin", "tests")
