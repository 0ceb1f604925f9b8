robot.setRobotId(0);
let x = robot.getPosX();
if (x == 0) {
  robot.moveForward();
}
