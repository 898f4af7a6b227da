import os
import subprocess
import sys
import argparse


def print_step(message):
    """Print a step message with formatting"""
    print(f"\n\033[1;34m===> {message}\033[0m")


def run_command(command, cwd=None):
    """Run a command and print its output"""
    print(f"Running: {' '.join(command)}")
    result = subprocess.run(command, cwd=cwd, capture_output=True, text=True)
    if result.returncode != 0:
        print(f"Error running command: {result.stderr or result.stdout}")
        return False
    if result.stdout:
        print(result.stdout)
    return True


def check_python_version():
    """Check if Python version is 3.8+ (math.comb)"""
    print_step("Checking Python version...")
    version = sys.version_info
    if version < (3, 8):
        print(f"Error: Python 3.8+ is required. You have {sys.version}")
        return False
    print(f"Using Python {version.major}.{version.minor}.{version.micro}")
    return True


def venv_executable(venv_dir, name):
    """Path of an executable inside the virtual environment"""
    if sys.platform == 'win32':
        return os.path.join(venv_dir, 'Scripts', name)
    return os.path.join(venv_dir, 'bin', name)


def create_virtual_environment(venv_dir):
    """Create a virtual environment"""
    print_step(f"Creating virtual environment in {venv_dir}...")

    if os.path.exists(venv_dir):
        print(f"Virtual environment already exists at {venv_dir}")
        return True

    return run_command([sys.executable, "-m", "venv", venv_dir])


def install_dependencies(venv_dir, app_dir):
    """Install the packages listed in requirements.txt"""
    print_step("Installing dependencies...")
    pip_path = venv_executable(venv_dir, 'pip')

    run_command([pip_path, "install", "--upgrade", "pip"])

    requirements = os.path.join(app_dir, 'requirements.txt')
    return run_command([pip_path, "install", "-r", requirements])


def create_launcher_script(venv_dir, app_dir):
    """Create a script that runs the scd command line inside the venv, unless one exists"""
    print_step("Creating launcher script...")

    runner = os.path.join(app_dir, "run_scd.py")
    if sys.platform == 'win32':
        launcher_path = os.path.join(app_dir, 'run_scd.bat')
    else:
        launcher_path = os.path.join(app_dir, 'run_scd.sh')

    if os.path.exists(launcher_path):
        print(f"Keeping existing launcher script: {launcher_path}")
        return True

    if sys.platform == 'win32':
        with open(launcher_path, 'w') as f:
            f.write('@echo off\n')
            f.write(f'call "{os.path.join(venv_dir, "Scripts", "activate.bat")}"\n')
            f.write(f'python "{runner}" %*\n')
    else:
        with open(launcher_path, 'w') as f:
            f.write('#!/bin/bash\n')
            f.write(f'source "{os.path.join(venv_dir, "bin", "activate")}"\n')
            f.write(f'python "{runner}" "$@"\n')

        os.chmod(launcher_path, 0o755)

    print(f"Created launcher script: {launcher_path}")
    return True


def run_tests(venv_dir, app_dir, include_slow):
    """Run the test suite inside the venv"""
    print_step("Running tests...")
    command = [venv_executable(venv_dir, 'python'), "-m", "pytest"]
    if not include_slow:
        command += ["-m", "not slow"]
    return run_command(command, cwd=app_dir)


def main():
    """Main setup function"""
    parser = argparse.ArgumentParser(description='Setup the symmetric chain decomposition tools')
    parser.add_argument('--test', action='store_true', help='Run the fast tests after installing')
    parser.add_argument('--slow', action='store_true', help='With --test, include the full sweeps')
    args = parser.parse_args()

    app_dir = os.path.dirname(os.path.abspath(__file__))
    venv_dir = os.path.join(app_dir, 'venv')

    print("Symmetric Chain Decomposition Setup")
    print("===================================")
    print(f"Application directory: {app_dir}")
    print(f"Virtual environment: {venv_dir}")

    if not check_python_version():
        return 1

    if not create_virtual_environment(venv_dir):
        print("Failed to create virtual environment")
        return 1

    if not install_dependencies(venv_dir, app_dir):
        print("Failed to install dependencies")
        return 1

    if not create_launcher_script(venv_dir, app_dir):
        print("Failed to create launcher script")
        return 1

    if args.test and not run_tests(venv_dir, app_dir, args.slow):
        print("Tests failed")
        return 1

    print("\n\033[1;32mSetup completed successfully!\033[0m")
    launcher = 'run_scd.bat' if sys.platform == 'win32' else 'run_scd.sh'
    print("\nTo generate the chains of L(5, 4):")
    print(f"  {os.path.join(app_dir, launcher)} generate --n 4 --format text")

    return 0


if __name__ == '__main__':
    sys.exit(main())
