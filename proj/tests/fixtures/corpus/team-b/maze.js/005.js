if (x == 1) {
  robot.moveForward();
